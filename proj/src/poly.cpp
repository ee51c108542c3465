#include "planechar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace planechar::poly {

Exponent operator+(Exponent x, Exponent y) noexcept {
  return Exponent{x.e0 + y.e0, x.e1 + y.e1, x.e2 + y.e2};
}

std::vector<Exponent> monomials(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(forms_dim(d)));
  for (int e0 = d; e0 >= 0; --e0) {
    for (int e1 = d - e0; e1 >= 0; --e1) out.push_back(Exponent{e0, e1, d - e0 - e1});
  }
  return out;
}

HomogPoly::HomogPoly(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(forms_dim(degree)), 0) {
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative degree form");
}

HomogPoly::HomogPoly(int degree, std::vector<Int> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(forms_dim(degree))) {
    throw Error(ErrorCode::DegreeMismatch, "coefficient vector does not match degree " +
                                               std::to_string(degree));
  }
}

HomogPoly HomogPoly::monomial(Exponent e, Int coeff) {
  HomogPoly p(e.degree());
  p.coeffs_[monomial_index(e)] = coeff;
  return p;
}

HomogPoly HomogPoly::power(int variable, int exponent) {
  Exponent e;
  (variable == 0 ? e.e0 : variable == 1 ? e.e1 : e.e2) = exponent;
  return monomial(e);
}

Int HomogPoly::coefficient(Exponent e) const {
  if (e.degree() != degree_) return 0;
  return coeffs_[monomial_index(e)];
}

bool HomogPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

std::size_t HomogPoly::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Int c) { return c != 0; }));
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly r = *this;
  for (Int& c : r.coeffs_) c = checked_sub(0, c);
  return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& other) {
  if (other.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& other) {
  if (other.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "subtracting forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return *this;
}

HomogPoly& HomogPoly::operator*=(Int scalar) {
  for (Int& c : coeffs_) c = checked_mul(c, scalar);
  return *this;
}

HomogPoly operator*(const HomogPoly& x, const HomogPoly& y) { return mul(x, y); }

HomogPoly mul(const HomogPoly& f, const HomogPoly& g) {
  HomogPoly out(f.degree() + g.degree());
  const auto fm = monomials(f.degree());
  const auto gm = monomials(g.degree());
  std::vector<Int> acc(out.coefficients().begin(), out.coefficients().end());
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const Int fc = f.coefficients()[i];
    if (fc == 0) continue;
    for (std::size_t j = 0; j < gm.size(); ++j) {
      const Int gc = g.coefficients()[j];
      if (gc == 0) continue;
      Int& slot = acc[monomial_index(fm[i] + gm[j])];
      slot = checked_add(slot, checked_mul(fc, gc));
    }
  }
  return HomogPoly(out.degree(), std::move(acc));
}

namespace {

void write_monomial(std::ostream& out, Exponent e) {
  bool first = true;
  const int exps[3] = {e.e0, e.e1, e.e2};
  for (int v = 0; v < 3; ++v) {
    if (exps[v] == 0) continue;
    if (!first) out << '*';
    out << 'x' << v;
    if (exps[v] > 1) out << '^' << exps[v];
    first = false;
  }
}

}  // namespace

std::string HomogPoly::to_string() const {
  std::ostringstream out;
  const auto basis = monomials(degree_);
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int c = coeffs_[k];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (degree_ == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      write_monomial(out, basis[k]);
    }
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<std::pair<Exponent, Int>> terms() {
    std::vector<std::pair<Exponent, Int>> out;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      Int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out.push_back(term(sign));
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Exponent, Int> term(Int sign) {
    Int coeff = 1;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected a variable after '*'");
      }
    }
    Exponent e;
    while (peek() == 'x') {
      ++pos_;
      const char v = peek();
      if (v < '0' || v > '2') fail("variables are x0, x1, x2");
      ++pos_;
      Int power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        power = number();
      }
      if (power > 1000) fail("exponent too large");
      (v == '0' ? e.e0 : v == '1' ? e.e1 : e.e2) += static_cast<int>(power);
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected a variable after '*'");
      }
    }
    if (!have_factor) fail("expected a term");
    return {e, checked_mul(sign, coeff)};
  }

  Int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10), peek() - '0');
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly HomogPoly::parse(std::string_view text, std::optional<int> degree_hint) {
  const auto terms = Parser(text).terms();
  std::optional<int> degree = degree_hint;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!degree) degree = e.degree();
    if (e.degree() != *degree) {
      throw Error(ErrorCode::DegreeMismatch, "'" + std::string(text) + "' is not homogeneous");
    }
  }
  if (!degree) throw Error(ErrorCode::ParseError, "the zero polynomial needs an explicit degree");
  HomogPoly p(*degree);
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Int& slot = p.coeffs_[monomial_index(e)];
    slot = checked_add(slot, c);
  }
  return p;
}

PolyMatrix::PolyMatrix(std::vector<Int> row_degrees, std::vector<Int> col_degrees)
    : row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size()) {}

PolyMatrix PolyMatrix::without_row(std::size_t r) const {
  std::vector<Int> rows = row_degrees_;
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
  PolyMatrix m(std::move(rows), col_degrees_);
  for (std::size_t i = 0, out = 0; i < this->rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols(); ++j) m.set(out, j, at(i, j));
    ++out;
  }
  return m;
}

PolyMatrix PolyMatrix::without_col(std::size_t c) const {
  std::vector<Int> cols = col_degrees_;
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
  PolyMatrix m(row_degrees_, std::move(cols));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0, out = 0; j < this->cols(); ++j) {
      if (j == c) continue;
      m.set(i, out++, at(i, j));
    }
  }
  return m;
}

void PolyMatrix::check_pattern() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto& e = at(i, j);
      if (e && e->degree() != pattern_degree(i, j)) {
        throw Error(ErrorCode::DegreeMismatch,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has degree " +
                        std::to_string(e->degree()) + ", pattern requires " +
                        std::to_string(pattern_degree(i, j)));
      }
    }
  }
}

namespace {

HomogPoly expand(const PolyMatrix& m, int degree) {
  const std::size_t n = m.rows();
  if (n == 0) return HomogPoly::monomial(Exponent{}, 1);
  if (n == 1) return m.is_zero_at(0, 0) ? HomogPoly(degree) : *m.at(0, 0);

  // Sparsest line: fewest nonzero entries.
  std::size_t best = 0;
  bool best_is_row = true;
  std::size_t best_count = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rc = 0, cc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rc += !m.is_zero_at(i, j);
      cc += !m.is_zero_at(j, i);
    }
    if (rc < best_count) best = i, best_is_row = true, best_count = rc;
    if (cc < best_count) best = i, best_is_row = false, best_count = cc;
  }

  HomogPoly total(degree);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t i = best_is_row ? best : t;
    const std::size_t j = best_is_row ? t : best;
    if (m.is_zero_at(i, j)) continue;
    const HomogPoly& entry = *m.at(i, j);
    // A negative cofactor degree forces a zero cofactor.
    if (degree < entry.degree()) continue;
    const PolyMatrix minor = m.without_row(i).without_col(j);
    HomogPoly term = mul(entry, expand(minor, degree - entry.degree()));
    if ((i + j) % 2 == 1) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

HomogPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DegreeMismatch, "determinant of a non-square matrix");
  m.check_pattern();
  Int degree = 0;
  for (Int c : m.col_degrees()) degree += c;
  for (Int r : m.row_degrees()) degree -= r;
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative determinant degree");
  return expand(m, static_cast<int>(degree));
}

}  // namespace planechar::poly
