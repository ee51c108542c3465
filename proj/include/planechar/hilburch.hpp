#pragma once

// Explicit Hilbert-Burch matrices for realizable Betti data and the ideals
// generated by their maximal minors.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/field.hpp"
#include "planechar/poly.hpp"

namespace planechar::hilburch {

// (k+1) x k matrix of forms, rows graded by a, columns by b. A nonzero
// entry (i, j) has degree b_j - a_i > 0; positions with b_j <= a_i hold
// no entry.
class GradedMatrix {
 public:
  // DegreeMismatch if the matrix is not (k+1) x k or breaks the grading.
  explicit GradedMatrix(poly::PolyMatrix matrix);

  const poly::PolyMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }

 private:
  poly::PolyMatrix matrix_;
};

// phi_{j+1,j} = x2^{b_j - a_{j+1}}, phi_{j,j} = x1^{b_j - a_j},
// phi_{j-1,j} = x0^{b_j - a_{j-1}}, zero elsewhere (1-based indices).
// NotRealizable with the violated clause otherwise.
GradedMatrix build_exi_matrix(const betti::BettiSequence& seq);

struct GeneratorSet {
  // Delta_i = (-1)^{i+1} det(matrix without row i), deg Delta_i = a_i.
  std::vector<poly::HomogPoly> minors;
  GradedMatrix source;
};

GeneratorSet maximal_minors(const GradedMatrix& m);

// Columns of the matrix, as coefficient vectors against the minors.
std::vector<std::optional<poly::HomogPoly>> column(const GradedMatrix& m, std::size_t j);

inline constexpr std::uint64_t kDefaultProbeSeed = 0x5eedf00dULL;
inline constexpr std::size_t kDefaultProbeTrials = 25;

struct ProbeSample {
  std::array<Int, 3> point;
  std::size_t rank;
};

struct ProbeReport {
  std::size_t expected_rank = 0;
  std::size_t rank_at_support = 0;   // rank at (1:0:0)
  std::uint64_t seed = 0;
  std::string field;
  std::vector<ProbeSample> samples;
};

// Scalar rank of the matrix at seeded pseudorandom points of P^2 other
// than (1:0:0) must be k, and below k at (1:0:0). Points use residues in
// [0, p) over F_p and integers in [-64, 64] over Q. RankClaimViolated names
// the first offending point.
ProbeReport rank_drop_probe(const GradedMatrix& m, std::size_t trials = kDefaultProbeTrials,
                            std::uint64_t seed = kDefaultProbeSeed, const FieldSpec& field = {});

// Deterministic alternative: the minors vanish only at (1:0:0) iff some
// powers of x1 and x2 lie in the ideal they generate. Returns the smallest
// such exponent, searched up to sum(b).
std::optional<int> support_certificate(const GeneratorSet& generators, const FieldSpec& field = {});

}  // namespace planechar::hilburch
