#include <cstdlib>
#include <string_view>

#include "planechar/kernels.hpp"

namespace planechar::kernels {

#if defined(PLANECHAR_HAVE_AVX2)
namespace detail {
const RowKernels& avx2_table() noexcept;
}
#endif

Modulus::Modulus(std::uint32_t prime)
    : p(prime), barrett(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / prime)) {}

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const RowKernels* avx2_kernels() noexcept {
#if defined(PLANECHAR_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

std::optional<const RowKernels*> kernels_for(Isa isa, const Modulus& m) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
    case Isa::Avx2:
      if (const RowKernels* k = avx2_kernels(); k != nullptr && m.lane32_ok()) return k;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

enum class Request { Auto, Scalar, Avx2 };

Request env_request() noexcept {
  const char* value = std::getenv("PLANECHAR_KERNELS");
  if (value == nullptr) return Request::Auto;
  const std::string_view v(value);
  if (v == "scalar") return Request::Scalar;
  if (v == "avx2") return Request::Avx2;
  return Request::Auto;
}

}  // namespace

const RowKernels& select_kernels(const Modulus& m) noexcept {
  static const Request request = env_request();
  if (request == Request::Scalar) return scalar_kernels();
  if (auto k = kernels_for(Isa::Avx2, m)) return **k;
  return scalar_kernels();
}

}  // namespace planechar::kernels
