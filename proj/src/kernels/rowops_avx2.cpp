// Compiled with -mavx2. Only reached through avx2_kernels(), which checks
// the CPU feature bit first.

#include <immintrin.h>

#include "planechar/kernels.hpp"

namespace planechar::kernels {
namespace detail {

namespace {

// High 32 bits of the unsigned 32x32 products, all eight lanes.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0b10101010);
}

// x mod p for x < 2^32, p < 2^16.
inline __m256i reduce(__m256i x, __m256i vp, __m256i vbarrett) {
  const __m256i q = mulhi_epu32(x, vbarrett);
  const __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

void addmul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                 std::uint32_t f, const Modulus& m) {
  if (f == 0) return;
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(m.barrett));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, vp, vb));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(f) * src[i]) % m.p);
  }
}

void scale_avx2(std::uint32_t* row, std::size_t n, std::uint32_t f, const Modulus& m) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(m.p));
  const __m256i vb = _mm256_set1_epi32(static_cast<int>(m.barrett));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i),
                        reduce(_mm256_mullo_epi32(r, vf), vp, vb));
  }
  for (; i < n; ++i) {
    row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f) * row[i] % m.p);
  }
}

std::size_t first_nonzero_avx2(const std::uint32_t* row, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const unsigned zero_mask =
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, zero))));
    if (zero_mask != 0xffu) return i + static_cast<std::size_t>(__builtin_ctz(~zero_mask));
  }
  for (; i < n; ++i) {
    if (row[i] != 0) return i;
  }
  return n;
}

constexpr RowKernels kAvx2{Isa::Avx2, addmul_avx2, scale_avx2, first_nonzero_avx2};

}  // namespace

const RowKernels& avx2_table() noexcept { return kAvx2; }

}  // namespace detail
}  // namespace planechar::kernels
