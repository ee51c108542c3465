#pragma once

// Dense exact linear algebra over a coefficient field (see field.hpp).
// Row operations go through Field::addmul / Field::scale so that the prime
// field picks up the vectorized row kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace planechar::linalg {

template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix(const Field& field, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t j = 0; j < cols_; ++j) std::swap(ra[j], rb[j]);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

// Reduced row echelon form in place. Pivot rows are normalized to a leading
// one; returns the pivot column of each nonzero row, in row order.
template <class Field>
std::vector<std::size_t> rref(const Field& field, Matrix<Field>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    field.scale(m.row(r).subspan(c), field.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field.is_zero(m(i, c))) continue;
      const auto f = field.neg(m(i, c));
      field.addmul(m.row(i).subspan(c), std::span<const typename Field::Elem>(m.row(r).subspan(c)), f);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Rank by forward elimination only.
template <class Field>
std::size_t rank(const Field& field, Matrix<Field> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    field.scale(m.row(r).subspan(c), field.inv(m(r, c)));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (field.is_zero(m(i, c))) continue;
      const auto f = field.neg(m(i, c));
      field.addmul(m.row(i).subspan(c), std::span<const typename Field::Elem>(m.row(r).subspan(c)), f);
    }
    ++r;
  }
  return r;
}

// Basis of {v : m v = 0}, one vector per free column: the free coordinate
// is one, the other free coordinates are zero.
template <class Field>
std::vector<std::vector<typename Field::Elem>> kernel_basis(const Field& field, Matrix<Field> m) {
  const auto pivots = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Elem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Field::Elem> v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally built subspace of Field^dim, stored as echelon rows with a
// leading one at distinct pivot columns.
template <class Field>
class EchelonSpan {
 public:
  using Elem = typename Field::Elem;
  using Vector = std::vector<Elem>;

  EchelonSpan(const Field& field, std::size_t dim)
      : field_(field), dim_(dim), row_at_col_(dim, kNone) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  std::span<const std::size_t> pivot_columns() const noexcept { return pivot_cols_; }

  // Adds v to the span; returns true if the rank grew.
  bool insert(Vector v) {
    const std::size_t lead = reduce(v);
    if (lead == dim_) return false;
    field_.scale(std::span<Elem>(v).subspan(lead), field_.inv(v[lead]));
    row_at_col_[lead] = rows_.size();
    pivot_cols_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(Vector v) const { return reduce(v) == dim_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Eliminates v against the stored pivots left to right. Returns the first
  // column where v is nonzero with no pivot to clear it, or dim_.
  std::size_t reduce(Vector& v) const {
    std::span<Elem> view(v);
    std::size_t j = field_.first_nonzero(std::span<const Elem>(view), 0);
    while (j < dim_) {
      const std::size_t r = row_at_col_[j];
      if (r == kNone) return j;
      const auto f = field_.neg(v[j]);
      field_.addmul(view.subspan(j), std::span<const Elem>(rows_[r]).subspan(j), f);
      j = field_.first_nonzero(std::span<const Elem>(view), j + 1);
    }
    return dim_;
  }

  Field field_;
  std::size_t dim_;
  std::vector<std::size_t> row_at_col_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<Vector> rows_;
};

}  // namespace planechar::linalg
