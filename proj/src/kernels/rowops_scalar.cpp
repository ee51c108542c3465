#include "planechar/kernels.hpp"

namespace planechar::kernels {
namespace {

void addmul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                   std::uint32_t f, const Modulus& m) {
  if (f == 0) return;
  const std::uint64_t p = m.p;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(f) * src[i]) % p);
  }
}

void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t f, const Modulus& m) {
  const std::uint64_t p = m.p;
  for (std::size_t i = 0; i < n; ++i) {
    row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f) * row[i] % p);
  }
}

std::size_t first_nonzero_scalar(const std::uint32_t* row, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] != 0) return i;
  }
  return n;
}

constexpr RowKernels kScalar{Isa::Scalar, addmul_scalar, scale_scalar, first_nonzero_scalar};

}  // namespace

const RowKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace planechar::kernels
