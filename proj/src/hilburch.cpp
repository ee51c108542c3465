#include "planechar/hilburch.hpp"

#include <random>

#include "planechar/linalg.hpp"
#include "planechar/resolve.hpp"

namespace planechar::hilburch {

using poly::HomogPoly;

GradedMatrix::GradedMatrix(poly::PolyMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.cols() == 0 || matrix_.rows() != matrix_.cols() + 1) {
    throw Error(ErrorCode::DegreeMismatch, "a Hilbert-Burch matrix is (k+1) x k with k >= 1");
  }
  matrix_.check_pattern();
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (matrix_.pattern_degree(i, j) <= 0 && !matrix_.is_zero_at(i, j)) {
        throw Error(ErrorCode::DegreeMismatch, "nonzero entry (" + std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) +
                                                   ") of non-positive degree breaks minimality");
      }
    }
  }
}

GradedMatrix build_exi_matrix(const betti::BettiSequence& seq) {
  if (const auto r = betti::is_realizable(seq); !r) {
    throw Error(ErrorCode::NotRealizable, r.message);
  }
  const auto a = seq.a();
  const auto b = seq.b();
  poly::PolyMatrix m(std::vector<Int>(a.begin(), a.end()), std::vector<Int>(b.begin(), b.end()));
  // 0-based: column j touches rows j-1 (x0), j (x1), j+1 (x2).
  for (std::size_t j = 0; j < seq.k(); ++j) {
    const auto exponent = [&](std::size_t i) { return static_cast<int>(b[j] - a[i]); };
    if (j >= 1) m.set(j - 1, j, HomogPoly::power(0, exponent(j - 1)));
    m.set(j, j, HomogPoly::power(1, exponent(j)));
    m.set(j + 1, j, HomogPoly::power(2, exponent(j + 1)));
  }
  return GradedMatrix(std::move(m));
}

GeneratorSet maximal_minors(const GradedMatrix& m) {
  std::vector<HomogPoly> minors;
  minors.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    HomogPoly d = poly::det(m.matrix().without_row(i));
    minors.push_back(i % 2 == 0 ? std::move(d) : -d);
  }
  return GeneratorSet{std::move(minors), m};
}

std::vector<std::optional<HomogPoly>> column(const GradedMatrix& m, std::size_t j) {
  std::vector<std::optional<HomogPoly>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.matrix().at(i, j));
  return out;
}

namespace {

template <class Field>
std::size_t rank_at(const Field& field, const GradedMatrix& gm,
                    const std::array<typename Field::Elem, 3>& point) {
  linalg::Matrix<Field> scalar(field, gm.rows(), gm.cols());
  for (std::size_t i = 0; i < gm.rows(); ++i) {
    for (std::size_t j = 0; j < gm.cols(); ++j) {
      if (!gm.matrix().is_zero_at(i, j)) scalar(i, j) = gm.matrix().at(i, j)->evaluate(field, point);
    }
  }
  return linalg::rank(field, std::move(scalar));
}

std::string describe(const std::array<Int, 3>& p) {
  return "(" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) + ")";
}

}  // namespace

ProbeReport rank_drop_probe(const GradedMatrix& m, std::size_t trials, std::uint64_t seed,
                            const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    ProbeReport report;
    report.expected_rank = m.cols();
    report.seed = seed;
    report.field = field.name();
    auto lift = [&](const std::array<Int, 3>& p) {
      return std::array{field.from_int(p[0]), field.from_int(p[1]), field.from_int(p[2])};
    };

    report.rank_at_support = rank_at(field, m, lift({1, 0, 0}));
    if (report.rank_at_support >= m.cols()) {
      throw Error(ErrorCode::RankClaimViolated, "full rank at the support point (1:0:0)");
    }

    std::mt19937_64 rng(seed);
    const bool rational = spec.kind == FieldSpec::Kind::Rational;
    auto draw = [&]() -> Int {
      if (rational) return static_cast<Int>(rng() % 129) - 64;
      return static_cast<Int>(rng() % spec.prime);
    };
    while (report.samples.size() < trials) {
      std::array<Int, 3> p{draw(), draw(), draw()};
      // Anything with x1 = x2 = 0 is (1:0:0) or not a point.
      if (field.is_zero(field.from_int(p[1])) && field.is_zero(field.from_int(p[2]))) continue;
      const std::size_t r = rank_at(field, m, lift(p));
      if (r != m.cols()) {
        throw Error(ErrorCode::RankClaimViolated,
                    "rank " + std::to_string(r) + " < " + std::to_string(m.cols()) + " at " + describe(p));
      }
      report.samples.push_back(ProbeSample{p, r});
    }
    return report;
  });
}

std::optional<int> support_certificate(const GeneratorSet& generators, const FieldSpec& field) {
  const resolve::GradedIdeal ideal{generators.minors};
  Int bound = 0;
  for (Int b : generators.source.matrix().col_degrees()) bound += b;
  for (int n = 1; n <= bound; ++n) {
    if (resolve::contains(ideal, HomogPoly::power(1, n), field) &&
        resolve::contains(ideal, HomogPoly::power(2, n), field)) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace planechar::hilburch
