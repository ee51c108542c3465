#pragma once

// Modular row kernels for dense elimination over F_p.
//
// Every kernel has a portable scalar reference implementation. Vectorized
// variants are compiled in separate translation units with their own target
// flags and picked at runtime from the CPU feature set; they must produce
// results bit-identical to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace planechar::kernels {

struct Modulus {
  std::uint32_t p = 0;
  // floor(2^32 / p); the Barrett quotient estimate is off by at most one
  // for any 32-bit dividend.
  std::uint32_t barrett = 0;

  explicit Modulus(std::uint32_t prime);

  // The 32-bit lane kernels need (p-1)^2 + (p-1) < 2^32.
  bool lane32_ok() const noexcept { return p < (1u << 16); }
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct RowKernels {
  Isa isa;
  // dst[i] <- (dst[i] + f * src[i]) mod p, inputs reduced.
  void (*addmul)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                 std::uint32_t f, const Modulus& m);
  // row[i] <- row[i] * f mod p.
  void (*scale)(std::uint32_t* row, std::size_t n, std::uint32_t f, const Modulus& m);
  // Index of the first nonzero entry, or n.
  std::size_t (*first_nonzero)(const std::uint32_t* row, std::size_t n);
};

const RowKernels& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const RowKernels* avx2_kernels() noexcept;

// Best kernel set for the modulus. PLANECHAR_KERNELS=scalar|avx2|auto in the
// environment overrides the automatic choice; an unavailable request falls
// back to scalar.
const RowKernels& select_kernels(const Modulus& m) noexcept;

// Explicit choice, used by equivalence tests. Returns nullopt if the ISA is
// not usable for this modulus on this machine.
std::optional<const RowKernels*> kernels_for(Isa isa, const Modulus& m) noexcept;

}  // namespace planechar::kernels
