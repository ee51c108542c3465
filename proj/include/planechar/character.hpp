#pragma once

// Numerical characters of zero-dimensional subschemes of P^2 and the
// Hilbert-function quantities they determine.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planechar/error.hpp"
#include "planechar/integer.hpp"

namespace planechar::charcore {

struct CharacterDefect {
  ErrorCode code;
  std::size_t index = 0;  // offending position, where one exists
  std::string message;
};

class NumericalCharacter;

// Inverse of delta(): the character whose first difference matches the
// given Delta(0..N) exactly, if there is one. N must reach past n_0 - 1.
std::optional<NumericalCharacter> character_from_delta(std::span<const Int> delta);

// Nonincreasing sequence (n_0, ..., n_{s-1}) with n_{s-1} >= s. Only
// obtainable through make(), so holders never re-validate.
class NumericalCharacter {
 public:
  static std::optional<CharacterDefect> check(std::span<const Int> entries);
  // Throws Error with the code of the first violated clause.
  static NumericalCharacter make(std::vector<Int> entries);

  std::size_t length() const noexcept { return entries_.size(); }
  std::span<const Int> entries() const noexcept { return entries_; }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int front() const { return entries_.front(); }
  Int back() const { return entries_.back(); }

  // Length first, then entries lexicographically.
  friend std::strong_ordering operator<=>(const NumericalCharacter& x,
                                          const NumericalCharacter& y) noexcept;
  friend bool operator==(const NumericalCharacter&, const NumericalCharacter&) = default;

  // "(n_0, ..., n_{s-1})"
  std::string to_string() const;

 private:
  friend std::optional<NumericalCharacter> character_from_delta(std::span<const Int> delta);
  explicit NumericalCharacter(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

// H, its first difference and the cohomology dimensions over degrees [0, N].
struct HilbertTable {
  Int degree = 0;
  std::vector<Int> hilbert;
  std::vector<Int> delta;
  std::vector<Int> h0;
  std::vector<Int> h1;

  Int window() const noexcept { return static_cast<Int>(hilbert.size()) - 1; }
  bool operator==(const HilbertTable&) const = default;
};

// Builds the table from H values on [0, N]; deg is supplied by the caller.
HilbertTable table_from_hilbert(std::vector<Int> hilbert, Int degree);

struct SplitResult {
  std::size_t gap;
  NumericalCharacter top;
  NumericalCharacter residual;
};

struct Piece {
  Int shift;
  NumericalCharacter character;
  bool operator==(const Piece&) const = default;
};

Int degree(const NumericalCharacter& chi);

// h^1(I_Z(n)) = sum_i ([n_i - n - 1]_+ - [i - n - 1]_+).
Int h1(const NumericalCharacter& chi, Int n);

// First difference of the Hilbert function at i >= 0.
Int delta(const NumericalCharacter& chi, Int i);

// Default window n_0 + 2 when N is omitted; WindowTooSmall if N < n_0.
HilbertTable hilbert_table(const NumericalCharacter& chi, std::optional<Int> window = std::nullopt);

bool is_connected(const NumericalCharacter& chi);

// Smallest t >= 1 with n_{t-1} > n_t + 1.
std::optional<std::size_t> first_gap(const NumericalCharacter& chi);

// NoGapAtT unless 1 <= t <= s-1 and n_{t-1} > n_t + 1.
SplitResult split_at(const NumericalCharacter& chi, std::size_t t);

// Splits at the smallest gap until every piece is connected. Piece i carries
// the cumulative shift to add back to its entries.
std::vector<Piece> decompose(const NumericalCharacter& chi);

// Every character with length <= s_max and degree <= d_max, ordered by
// (length, entries) lexicographically.
void for_each_character(Int s_max, Int d_max,
                        const std::function<void(const NumericalCharacter&)>& visit);
std::vector<NumericalCharacter> enumerate_characters(Int s_max, Int d_max);

}  // namespace planechar::charcore
