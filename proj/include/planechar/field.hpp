#pragma once

// Coefficient fields for the exact linear algebra: F_p with word-sized
// residues, and Q through GMP rationals as the certification mode.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "planechar/integer.hpp"
#include "planechar/kernels.hpp"

namespace planechar {

bool is_prime(std::uint64_t n) noexcept;

class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  // Throws ParseError unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);
  PrimeField(std::uint32_t p, const kernels::RowKernels& row_kernels);

  std::uint32_t characteristic() const noexcept { return modulus_.p; }
  kernels::Isa isa() const noexcept { return kernels_->isa; }
  std::string name() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(Int v) const noexcept {
    const auto p = static_cast<Int>(modulus_.p);
    Int r = v % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  Elem add(Elem a, Elem b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= modulus_.p ? s - modulus_.p : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + modulus_.p - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : modulus_.p - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % modulus_.p);
  }
  Elem inv(Elem a) const;

  void addmul(std::span<Elem> dst, std::span<const Elem> src, Elem f) const noexcept {
    kernels_->addmul(dst.data(), src.data(), dst.size(), f, modulus_);
  }
  void scale(std::span<Elem> row, Elem f) const noexcept {
    kernels_->scale(row.data(), row.size(), f, modulus_);
  }
  std::size_t first_nonzero(std::span<const Elem> row, std::size_t from) const noexcept {
    return from + kernels_->first_nonzero(row.data() + from, row.size() - from);
  }

 private:
  kernels::Modulus modulus_;
  const kernels::RowKernels* kernels_;
};

class RationalField {
 public:
  using Elem = mpq_class;

  std::string name() const { return "rational"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(Int v) const { return Elem(static_cast<long>(v)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;

  // Zero entries of src are skipped; the rows met in practice are sparse
  // and GMP arithmetic dominates the cost.
  void addmul(std::span<Elem> dst, std::span<const Elem> src, const Elem& f) const {
    if (sgn(f) == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (sgn(src[i]) != 0) dst[i] += f * src[i];
    }
  }
  void scale(std::span<Elem> row, const Elem& f) const {
    for (auto& e : row) {
      if (sgn(e) != 0) e *= f;
    }
  }
  std::size_t first_nonzero(std::span<const Elem> row, std::size_t from) const {
    while (from < row.size() && sgn(row[from]) == 0) ++from;
    return from;
  }
};

// Runtime field selection, parsed from "prime:<p>", "prime" or "rational".
struct FieldSpec {
  enum class Kind { Prime, Rational };

  Kind kind = Kind::Prime;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  static FieldSpec parse(std::string_view text);
  static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }
  std::string to_string() const;
};

// Calls fn with a concrete field object selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rational) return fn(RationalField{});
  return fn(PrimeField(spec.prime));
}

}  // namespace planechar
