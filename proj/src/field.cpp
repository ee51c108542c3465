#include "planechar/field.hpp"

#include <charconv>

namespace planechar {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t checked_prime(std::uint32_t p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::ParseError, "field characteristic must be an odd prime below 2^31, got " +
                                           std::to_string(p));
  }
  return p;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p)
    : modulus_(checked_prime(p)), kernels_(&kernels::select_kernels(modulus_)) {}

PrimeField::PrimeField(std::uint32_t p, const kernels::RowKernels& row_kernels)
    : modulus_(checked_prime(p)), kernels_(&row_kernels) {
  if (row_kernels.isa != kernels::Isa::Scalar && !modulus_.lane32_ok()) {
    kernels_ = &kernels::scalar_kernels();
  }
}

std::string PrimeField::name() const { return "prime:" + std::to_string(modulus_.p); }

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_.p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += modulus_.p;
  return static_cast<Elem>(t);
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q");
  return Elem(1) / a;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text == "prime") return FieldSpec{};
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && end == digits.data() + digits.size() && p < (1ull << 31)) {
      FieldSpec spec{Kind::Prime, checked_prime(static_cast<std::uint32_t>(p))};
      return spec;
    }
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) +
                                         "' (expected prime:<p> or rational)");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Rational ? "rational" : "prime:" + std::to_string(prime);
}

}  // namespace planechar
