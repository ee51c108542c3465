#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "planechar/hilburch.hpp"
#include "planechar/resolve.hpp"

using namespace planechar;
using namespace planechar::resolve;
using poly::HomogPoly;

namespace {

GradedIdeal ideal(std::initializer_list<std::string_view> gens) {
  GradedIdeal I;
  for (auto g : gens) I.generators.push_back(HomogPoly::parse(g));
  return I;
}

std::vector<Int> vec(std::span<const Int> s) { return {s.begin(), s.end()}; }

oracle::Form to_form(const HomogPoly& f) {
  oracle::Form out;
  const auto ms = poly::monomials(f.degree());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (f.coefficients()[i] != 0) out[{ms[i].e0, ms[i].e1, ms[i].e2}] = f.coefficients()[i];
  }
  return out;
}

std::size_t oracle_dim(const GradedIdeal& I, int n) {
  std::vector<oracle::Form> forms;
  std::vector<int> degs;
  for (const auto& g : I.generators) {
    forms.push_back(to_form(g));
    degs.push_back(g.degree());
  }
  return oracle::ideal_dim(forms, degs, n, 32003);
}

GradedIdeal exi_ideal(const charcore::NumericalCharacter& chi) {
  return GradedIdeal{hilburch::maximal_minors(hilburch::build_exi_matrix(betti::minimal_betti(chi))).minors};
}

}  // namespace

TEST_CASE("ideal dimension") {
  CHECK(ideal_dimension(ideal({"x1", "x2"}), 2) == 5);
  const auto I = ideal({"x2^2", "x1*x2", "x1^4 - x0^3*x2"});
  CHECK(ideal_dimension(I, 3) == 5);
  CHECK(ideal_dimension(ideal({"x2^2", "x1^2"}), 2) == 2);
  for (int n = 0; n <= 8; ++n) {
    CHECK(static_cast<std::size_t>(ideal_dimension(I, n)) == oracle_dim(I, n));
    CHECK(ideal_dimension(I, n, FieldSpec::rational()) == ideal_dimension(I, n));
  }
}

TEST_CASE("Hilbert function of the quotient") {
  auto t = hilbert_of_quotient(ideal({"x1", "x2"}), 6);
  for (Int h : t.hilbert) CHECK(h == 1);
  t = hilbert_of_quotient(ideal({"x2^2", "x1*x2", "x1^4 - x0^3*x2"}), 5);
  CHECK(t.hilbert == std::vector<Int>{1, 3, 4, 5, 5, 5});
  CHECK(t.degree == 5);
  t = hilbert_of_quotient(ideal({"x2^2", "x1^2"}), 4);
  CHECK(t.hilbert == std::vector<Int>{1, 3, 4, 4, 4});
  try {
    hilbert_of_quotient(ideal({"x2^2", "x1*x2", "x1^4 - x0^3*x2"}), 3);
    FAIL("expected NotStabilized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStabilized);
  }
  CHECK_THROWS_AS(hilbert_of_quotient(ideal({"x1"}), 10), Error);
}

TEST_CASE("minimal generators") {
  auto g = minimal_generators(ideal({"x1", "x2", "x1^2"}));
  CHECK(g.alpha[1] == 2);
  CHECK(g.alpha[2] == 0);
  CHECK(g.generators.size() == 2);
  g = minimal_generators(ideal({"x1^4 - x0^3*x2", "x2^2", "x1*x2"}));
  CHECK(g.alpha[2] == 2);
  CHECK(g.alpha[3] == 0);
  CHECK(g.alpha[4] == 1);
  CHECK(g.generators.front().degree() == 2);
  g = minimal_generators(ideal({"x2^2", "x1^2"}));
  CHECK(g.alpha[2] == 2);
  // A redundant combination in the same degree is trimmed as well.
  g = minimal_generators(ideal({"x1^2", "x2^2", "x1^2 + 3*x2^2", "x0*x1^2"}));
  CHECK(g.alpha[2] == 2);
  CHECK(g.alpha[3] == 0);
}

TEST_CASE("syzygy degrees") {
  auto r = syzygy_betti(ideal({"x1", "x2"}));
  CHECK(r.beta[2] == 1);
  REQUIRE(r.betti);
  CHECK(*r.betti == betti::BettiSequence::make({1, 1}, {2}));
  r = syzygy_betti(ideal({"x2^2", "x1*x2", "x1^4 - x0^3*x2"}));
  REQUIRE(r.betti);
  CHECK(vec(r.betti->b()) == std::vector<Int>{3, 5});
  CHECK(vec(r.betti->a()) == std::vector<Int>{2, 2, 4});
  r = syzygy_betti(ideal({"x2^2", "x1^2"}));
  REQUIRE(r.betti);
  CHECK(vec(r.betti->b()) == std::vector<Int>{4});
  CHECK(character_of(r) == charcore::NumericalCharacter::make({3, 2}));
}

TEST_CASE("four points with three on a line carry a ghost pair") {
  const auto r = syzygy_betti(ideal({"x0*x2", "x1*x2", "x0^2*x1 - x0*x1^2"}));
  REQUIRE(r.betti);
  CHECK(*r.betti == betti::BettiSequence::make({2, 2, 3}, {3, 4}));
  CHECK(character_of(r) == charcore::NumericalCharacter::make({3, 2}));
  CHECK(betti::sauer_condition(*r.betti).ok);
  CHECK(betti::remark_checks(*character_of(r), *r.betti).all_pass());
}

TEST_CASE("inputs without a length-one resolution") {
  try {
    syzygy_betti(ideal({"x0", "x1", "x2"}));
    FAIL("expected UnexpectedDepth");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnexpectedDepth);
  }
  try {
    syzygy_betti(ideal({"x1^2", "x1*x2"}), {}, Options{30});
    FAIL("expected NotStabilized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStabilized);
  }
}

TEST_CASE("syzygy membership") {
  const auto gens = ideal({"x1", "x2"}).generators;
  std::vector<std::optional<HomogPoly>> koszul{HomogPoly::parse("x2"), HomogPoly::parse("-x1")};
  CHECK(in_syzygy_module(gens, koszul));
  std::vector<std::optional<HomogPoly>> wrong{HomogPoly::parse("x2"), HomogPoly::parse("x1")};
  CHECK_FALSE(in_syzygy_module(gens, wrong));
  std::vector<std::optional<HomogPoly>> partial{HomogPoly::parse("x2"), std::nullopt};
  CHECK_FALSE(in_syzygy_module(gens, partial));
}

TEST_CASE("resolution of constructed ideals") {
  for (const auto& chi : charcore::enumerate_characters(4, 16)) {
    const auto I = exi_ideal(chi);
    const auto r = syzygy_betti(I);
    const auto s = static_cast<Int>(chi.length());
    REQUIRE(r.betti);
    CHECK(*r.betti == betti::minimal_betti(chi));
    CHECK(character_of(r) == chi);
    Int sum_alpha = 0, sum_beta = 0;
    for (Int n = 0; n <= r.top_degree; ++n) {
      const auto i = static_cast<std::size_t>(n);
      sum_alpha += r.alpha[i];
      sum_beta += r.beta[i];
      if (n <= s) CHECK(r.beta[i] == 0);
      if (n < s) CHECK(r.alpha[i] == 0);
    }
    CHECK(sum_alpha == sum_beta + 1);
    CHECK(r.beta[static_cast<std::size_t>(r.top_degree)] == 0);
    CHECK(r.top_degree >= chi.front() + 2);
    const auto t = charcore::hilbert_table(chi);
    for (Int n = 0; n <= chi.front() + 2; ++n) {
      CHECK(r.hilbert.hilbert[static_cast<std::size_t>(n)] == t.hilbert[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("ideal dimensions agree with the naive oracle on constructed ideals") {
  for (const auto& chi : charcore::enumerate_characters(3, 10)) {
    const auto I = exi_ideal(chi);
    for (int n = 0; n <= static_cast<int>(chi.front()) + 2; ++n) {
      CHECK(static_cast<std::size_t>(ideal_dimension(I, n)) == oracle_dim(I, n));
    }
  }
}

TEST_CASE("prime, small prime and rational modes agree") {
  std::mt19937_64 rng(17);
  const auto chars = charcore::enumerate_characters(4, 16);
  for (int trial = 0; trial < 12; ++trial) {
    const auto& chi = chars[rng() % chars.size()];
    const auto I = exi_ideal(chi);
    const auto p = syzygy_betti(I);
    const auto q = syzygy_betti(I, FieldSpec::rational());
    const auto wide = syzygy_betti(I, FieldSpec::parse("prime:2147483647"));
    CHECK(p.alpha == q.alpha);
    CHECK(p.beta == q.beta);
    CHECK(p.hilbert == q.hilbert);
    CHECK(p.beta == wide.beta);
    CHECK(q.field == "rational");
  }
}
