#pragma once

// Graded Betti numbers of length-one resolutions
//   0 -> sum_j O(-b_j) -> sum_i O(-a_i) -> I_Z -> 0
// and their relation to the numerical character.
//
// Both degree lists are stored ascending (a_1 <= ... <= a_{k+1},
// b_1 <= ... <= b_k); indices in witnesses and diagnostics are 1-based to
// match the usual way these inequalities are written.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planechar/character.hpp"

namespace planechar::betti {

using charcore::HilbertTable;
using charcore::NumericalCharacter;

class BettiSequence {
 public:
  // Sorts both lists. InvalidBetti unless length(a) = length(b) + 1 >= 2,
  // every a_i >= 1 and every b_j >= 2. The degree-sum condition is left to
  // is_realizable().
  static BettiSequence make(std::vector<Int> a, std::vector<Int> b);

  std::span<const Int> a() const noexcept { return a_; }
  std::span<const Int> b() const noexcept { return b_; }
  std::size_t k() const noexcept { return b_.size(); }

  bool operator==(const BettiSequence&) const = default;
  std::string to_string() const;

 private:
  BettiSequence(std::vector<Int> a, std::vector<Int> b) : a_(std::move(a)), b_(std::move(b)) {}
  std::vector<Int> a_;
  std::vector<Int> b_;
};

// c(n) = #{i | n_i = n}.
class CountFunction {
 public:
  explicit CountFunction(const NumericalCharacter& chi);
  Int operator()(Int n) const noexcept;
  Int total() const noexcept { return total_; }

 private:
  Int low_;
  std::vector<Int> counts_;
  Int total_ = 0;
};

CountFunction counts(const NumericalCharacter& chi);

struct GhostPairs {
  Int degree;
  Int count = 1;
};

// The ghost-free Betti sequence of chi: alpha_s = c(s) + 1 and, for n > s,
// alpha_n - beta_n = c(n) - c(n-1) with min(alpha_n, beta_n) = 0. Optional
// ghost pairs add the same degree to both lists.
BettiSequence minimal_betti(const NumericalCharacter& chi,
                            std::optional<GhostPairs> ghosts = std::nullopt);

BettiSequence add_ghosts(const BettiSequence& seq, GhostPairs ghosts);

// Hilbert table on [0, N] from h^0(I(n)) = sum binom(n-a_i+2, 2) -
// sum binom(n-b_j+2, 2). NotRealizable if the degree sums differ,
// NegativeDimension if some H, h^0 or Delta comes out negative.
HilbertTable betti_to_hilbert(const BettiSequence& seq, Int window);

// Inverts Delta(i) = #{l | n_l >= i+1} on the table above.
NumericalCharacter betti_to_character(const BettiSequence& seq);

struct Realizability {
  enum class Clause { None, DegreeSum, SyzygyNotAboveGenerator };
  Clause failed = Clause::None;
  std::size_t index = 0;  // j with b_j <= a_{j+1}
  std::string message;

  explicit operator bool() const noexcept { return failed == Clause::None; }
};

// sum b = sum a and b_j > a_{j+1} for 1 <= j <= k.
Realizability is_realizable(const BettiSequence& seq);

struct SauerResult {
  bool ok = true;
  std::optional<std::size_t> witness;      // first p with b_p < a_{p+2}
  std::vector<std::size_t> equalities;     // every p with b_p = a_{p+2}
};

// b_n >= a_{n+2} for 1 <= n <= k-1. Equality counts as satisfied; such
// indices are reported separately.
SauerResult sauer_condition(const BettiSequence& seq);

struct Verdict {
  bool connected = true;
  bool sauer_ok = true;
  bool smoothable = true;
  std::optional<Int> witness;              // smallest gap t when not connected
  std::optional<std::string> diagnostic;   // set only if the two tests disagree
};

Verdict classify(const NumericalCharacter& chi);

enum class CorollaryVerdict { Smoothable, Inconclusive };

std::string_view to_string(CorollaryVerdict v) noexcept;

// A curve of degree d on an integral surface of degree s with d > s(s-1) is
// smoothable; nothing is concluded otherwise.
CorollaryVerdict corollary_check(Int d, Int s, bool on_integral_surface);

// Labels for the two geometric equivalents of smoothability; they are
// reported as text, nothing about surfaces is computed.
inline constexpr std::string_view kSmoothSurfaceLabel =
    "general curve of H_chi lies on a smooth surface of degree s";
inline constexpr std::string_view kIntegralSurfaceLabel =
    "general curve of H_chi lies on an integral surface of degree s";

struct RemarkClause {
  std::string name;
  bool pass;
  std::string detail;
};

struct RemarkReport {
  std::vector<RemarkClause> clauses;
  bool all_pass() const noexcept;
};

// a_1 = s, a_2 = n_{s-1}, b_k = n_0 + 1, #{b_j = b_k} = #{n_i = n_0} =
// h^1(b_k - 3), a_{k+1} <= n_0.
RemarkReport remark_checks(const NumericalCharacter& chi, const BettiSequence& seq);

}  // namespace planechar::betti
