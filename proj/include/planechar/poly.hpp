#pragma once

// Homogeneous forms in x0, x1, x2 with exact integer coefficients, stored
// densely per degree over the lexicographic monomial basis (x0 > x1 > x2).
// Field arithmetic only enters when forms are mapped into F_p or Q for the
// linear algebra.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "planechar/integer.hpp"

namespace planechar::poly {

struct Exponent {
  int e0 = 0;
  int e1 = 0;
  int e2 = 0;

  int degree() const noexcept { return e0 + e1 + e2; }
  auto operator<=>(const Exponent&) const = default;
};

Exponent operator+(Exponent x, Exponent y) noexcept;

// All exponents of total degree d, lexicographically descending:
// x0^d, x0^{d-1} x1, x0^{d-1} x2, ..., x2^d.
std::vector<Exponent> monomials(int d);

// Position of e inside monomials(e.degree()). With t = e1 + e2 this is
// t(t+1)/2 + e2.
constexpr std::size_t monomial_index(Exponent e) noexcept {
  const auto t = static_cast<std::size_t>(e.e1 + e.e2);
  return t * (t + 1) / 2 + static_cast<std::size_t>(e.e2);
}

// Index of x_v * m in degree d+1, for m at position index of degree d.
constexpr std::size_t shifted_index(std::size_t index, std::size_t t, int v) noexcept {
  if (v == 0) return index;
  return index + t + 1 + static_cast<std::size_t>(v == 2 ? 1 : 0);
}

class HomogPoly {
 public:
  // The zero form of the given degree.
  explicit HomogPoly(int degree);
  // DegreeMismatch unless coeffs has binom(degree+2, 2) entries.
  HomogPoly(int degree, std::vector<Int> coeffs);

  static HomogPoly monomial(Exponent e, Int coeff = 1);
  static HomogPoly power(int variable, int exponent);

  int degree() const noexcept { return degree_; }
  std::span<const Int> coefficients() const noexcept { return coeffs_; }
  Int coefficient(Exponent e) const;
  bool is_zero() const noexcept;
  std::size_t term_count() const noexcept;

  HomogPoly operator-() const;
  HomogPoly& operator+=(const HomogPoly& other);
  HomogPoly& operator-=(const HomogPoly& other);
  HomogPoly& operator*=(Int scalar);

  friend HomogPoly operator+(HomogPoly x, const HomogPoly& y) { return x += y; }
  friend HomogPoly operator-(HomogPoly x, const HomogPoly& y) { return x -= y; }
  friend HomogPoly operator*(HomogPoly x, Int c) { return x *= c; }
  friend HomogPoly operator*(const HomogPoly& x, const HomogPoly& y);

  bool operator==(const HomogPoly&) const = default;

  // Terms from the smallest monomial up, e.g. "x1^4 - x0^3*x2"; "0" for zero.
  std::string to_string() const;

  // Inverse of to_string; also accepts "3x0", "x0*x0" and spacing changes.
  // ParseError on syntax, DegreeMismatch on a non-homogeneous input. The zero
  // polynomial needs degree_hint.
  static HomogPoly parse(std::string_view text, std::optional<int> degree_hint = std::nullopt);

  template <class Field>
  typename Field::Elem evaluate(const Field& field,
                                const std::array<typename Field::Elem, 3>& point) const;

 private:
  int degree_;
  std::vector<Int> coeffs_;
};

HomogPoly mul(const HomogPoly& f, const HomogPoly& g);

// Matrix of forms with a degree pattern: entry (i, j) must be homogeneous
// of degree col_degrees[j] - row_degrees[i]. Absent entries are zero.
class PolyMatrix {
 public:
  PolyMatrix(std::vector<Int> row_degrees, std::vector<Int> col_degrees);

  std::size_t rows() const noexcept { return row_degrees_.size(); }
  std::size_t cols() const noexcept { return col_degrees_.size(); }
  std::span<const Int> row_degrees() const noexcept { return row_degrees_; }
  std::span<const Int> col_degrees() const noexcept { return col_degrees_; }
  Int pattern_degree(std::size_t i, std::size_t j) const noexcept {
    return col_degrees_[j] - row_degrees_[i];
  }

  const std::optional<HomogPoly>& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }
  void set(std::size_t i, std::size_t j, std::optional<HomogPoly> entry) {
    entries_[i * cols() + j] = std::move(entry);
  }
  bool is_zero_at(std::size_t i, std::size_t j) const {
    const auto& e = at(i, j);
    return !e || e->is_zero();
  }

  PolyMatrix without_row(std::size_t i) const;
  PolyMatrix without_col(std::size_t j) const;

  // DegreeMismatch naming the first entry off the pattern.
  void check_pattern() const;

 private:
  std::vector<Int> row_degrees_;
  std::vector<Int> col_degrees_;
  std::vector<std::optional<HomogPoly>> entries_;
};

// Determinant of a square pattern matrix by cofactor expansion along the
// sparsest row or column. The result has degree sum(col) - sum(row).
HomogPoly det(const PolyMatrix& m);

template <class Field>
typename Field::Elem HomogPoly::evaluate(const Field& field,
                                         const std::array<typename Field::Elem, 3>& point) const {
  // Powers of each coordinate up to the degree.
  std::array<std::vector<typename Field::Elem>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].reserve(static_cast<std::size_t>(degree_) + 1);
    powers[v].push_back(field.one());
    for (int e = 1; e <= degree_; ++e) powers[v].push_back(field.mul(powers[v].back(), point[v]));
  }
  auto total = field.zero();
  std::size_t idx = 0;
  for (const Exponent& e : monomials(degree_)) {
    const Int c = coeffs_[idx++];
    if (c == 0) continue;
    auto term = field.mul(powers[0][e.e0], field.mul(powers[1][e.e1], powers[2][e.e2]));
    total = field.add(total, field.mul(field.from_int(c), term));
  }
  return total;
}

}  // namespace planechar::poly
