#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "planechar/field.hpp"
#include "planechar/kernels.hpp"
#include "planechar/linalg.hpp"

using namespace planechar;
using namespace planechar::kernels;

namespace {

constexpr std::uint32_t kPrimes[] = {3, 5, 251, 32003, 65521};

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t p, unsigned zero_bias) {
  std::vector<std::uint32_t> v(n);
  for (auto& e : v) e = rng() % zero_bias ? 0 : static_cast<std::uint32_t>(rng() % p);
  return v;
}

std::vector<const RowKernels*> available(const Modulus& m) {
  std::vector<const RowKernels*> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (const auto k = kernels_for(isa, m)) out.push_back(*k);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(scalar_kernels().isa == Isa::Scalar);
  CHECK(kernels_for(Isa::Scalar, Modulus(32003)).has_value());
  // Wide primes never get the 32-bit lane kernels.
  CHECK_FALSE(kernels_for(Isa::Avx2, Modulus(2147483647u)).has_value());
  const std::string note = std::string("avx2 kernels ") + (avx2_kernels() ? "available" : "unavailable") +
                           "; selected for p=32003: " + std::string(to_string(select_kernels(Modulus(32003)).isa));
  MESSAGE(note);
}

TEST_CASE("row kernels against the % oracle, all lengths and tails") {
  std::mt19937_64 rng(0xabcdef);
  for (std::uint32_t p : kPrimes) {
    const Modulus m(p);
    for (const RowKernels* k : available(m)) {
      CAPTURE(p);
      CAPTURE(to_string(k->isa));
      for (std::size_t n = 0; n <= 70; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
          const auto src = random_row(rng, n, p, 1 + rep);
          auto dst = random_row(rng, n, p, 1 + rep);
          const auto f = static_cast<std::uint32_t>(rng() % p);
          auto expect = dst;
          for (std::size_t i = 0; i < n; ++i) {
            expect[i] = static_cast<std::uint32_t>((expect[i] + std::uint64_t{f} * src[i]) % p);
          }
          k->addmul(dst.data(), src.data(), n, f, m);
          CHECK(dst == expect);

          auto row = src;
          for (auto& e : expect = src) e = static_cast<std::uint32_t>(std::uint64_t{e} * f % p);
          k->scale(row.data(), n, f, m);
          CHECK(row == expect);

          std::size_t first = 0;
          while (first < n && src[first] == 0) ++first;
          CHECK(k->first_nonzero(src.data(), n) == first);
        }
      }
      // Extremes: every entry p-1, factor p-1.
      std::vector<std::uint32_t> a(37, p - 1), b(37, p - 1);
      k->addmul(a.data(), b.data(), a.size(), p - 1, m);
      const auto want = static_cast<std::uint32_t>((std::uint64_t{p - 1} * (p - 1) + (p - 1)) % p);
      for (auto e : a) CHECK(e == want);
      std::vector<std::uint32_t> zeros(50, 0);
      CHECK(k->first_nonzero(zeros.data(), zeros.size()) == 50);
      zeros[49] = 1;
      CHECK(k->first_nonzero(zeros.data(), zeros.size()) == 49);
    }
  }
}

TEST_CASE("elimination results are identical across kernel sets") {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {32003u, 251u, 65521u}) {
    const Modulus m(p);
    const auto sets = available(m);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 60;
      std::vector<std::vector<Int>> ints(r, std::vector<Int>(c));
      for (auto& row : ints) {
        for (auto& e : row) e = rng() % 3 ? 0 : static_cast<Int>(rng() % p);
      }
      std::vector<std::vector<std::vector<PrimeField::Elem>>> kernels;
      for (const RowKernels* k : sets) {
        const PrimeField F(p, *k);
        CHECK(F.isa() == k->isa);
        linalg::Matrix<PrimeField> mat(F, r, c);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < c; ++j) mat(i, j) = F.from_int(ints[i][j]);
        }
        CHECK(linalg::rank(F, mat) == oracle::rank_mod(ints, p));
        kernels.push_back(linalg::kernel_basis(F, mat));
      }
      for (std::size_t i = 1; i < kernels.size(); ++i) CHECK(kernels[i] == kernels[0]);
    }
  }
}
