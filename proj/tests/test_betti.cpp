#include <doctest.h>

#include <random>
#include <vector>

#include "oracle.hpp"
#include "planechar/betti.hpp"

using namespace planechar;
using namespace planechar::betti;
using charcore::NumericalCharacter;

namespace {

NumericalCharacter chr(std::vector<Int> v) { return NumericalCharacter::make(std::move(v)); }
BettiSequence seq(std::vector<Int> a, std::vector<Int> b) { return BettiSequence::make(std::move(a), std::move(b)); }
std::vector<Int> vec(std::span<const Int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("construction sorts and checks shape") {
  const auto s = seq({4, 2, 2}, {5, 3});
  CHECK(vec(s.a()) == std::vector<Int>{2, 2, 4});
  CHECK(vec(s.b()) == std::vector<Int>{3, 5});
  CHECK(s.k() == 2);
  CHECK_THROWS_AS(seq({1}, {}), Error);
  CHECK_THROWS_AS(seq({1, 1, 1}, {2}), Error);
  CHECK_THROWS_AS(seq({0, 1}, {2}), Error);
  CHECK_THROWS_AS(seq({1, 1}, {1}), Error);
  CHECK(s.to_string() == "a=(2, 2, 4), b=(3, 5)");
}

TEST_CASE("count function") {
  const CountFunction c32(chr({3, 2}));
  CHECK(c32(2) == 1);
  CHECK(c32(3) == 1);
  CHECK(c32(4) == 0);
  CHECK(CountFunction(chr({3, 3}))(3) == 2);
  const CountFunction c42(chr({4, 2}));
  CHECK(c42(2) == 1);
  CHECK(c42(3) == 0);
  CHECK(c42(4) == 1);
  CHECK(c42(1) == 0);
  CHECK(c42.total() == 2);
}

TEST_CASE("minimal Betti numbers of the named characters") {
  CHECK(minimal_betti(chr({1})) == seq({1, 1}, {2}));
  CHECK(minimal_betti(chr({3, 2})) == seq({2, 2}, {4}));
  CHECK(minimal_betti(chr({3, 3})) == seq({2, 3, 3}, {4, 4}));
  CHECK(minimal_betti(chr({4, 2})) == seq({2, 2, 4}, {3, 5}));
  CHECK(minimal_betti(chr({4, 2}), GhostPairs{3, 2}) == seq({2, 2, 3, 3, 4}, {3, 3, 3, 5}));
}

TEST_CASE("minimal Betti numbers agree with the third difference of H") {
  for (const auto& chi : charcore::enumerate_characters(5, 26)) {
    const std::vector<Int> n(chi.entries().begin(), chi.entries().end());
    const auto expected = oracle::betti_from_hilbert(oracle::hilbert(n, chi.front() + 3));
    const auto got = minimal_betti(chi);
    CHECK(vec(got.a()) == expected.a);
    CHECK(vec(got.b()) == expected.b);
  }
}

TEST_CASE("Betti -> Hilbert") {
  const auto t = betti_to_hilbert(seq({2, 2}, {4}), 4);
  CHECK(t.h0[2] == 2);
  CHECK(t.h0[4] == 11);
  CHECK(t.h0[4] == oracle::forms(4) - t.hilbert[4]);
  const auto point = betti_to_hilbert(seq({1, 1}, {2}), 6);
  for (Int h : point.hilbert) CHECK(h == 1);
  CHECK(point.degree == 1);
  try {
    betti_to_hilbert(seq({1, 1}, {3}), 4);
    FAIL("expected NotRealizable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRealizable);
  }
  // Degree sums agree but H goes negative: not the data of any scheme.
  try {
    betti_to_hilbert(seq({3, 3, 3}, {2, 7}), 8);
    FAIL("expected NegativeDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeDimension);
  }
}

TEST_CASE("Betti -> character") {
  CHECK(betti_to_character(seq({2, 2}, {4})) == chr({3, 2}));
  CHECK(betti_to_character(seq({1, 1}, {2})) == chr({1}));
  CHECK(betti_to_character(seq({2, 2, 4}, {3, 5})) == chr({4, 2}));
}

TEST_CASE("realizability") {
  CHECK(is_realizable(seq({2, 2, 4}, {3, 5})));
  const auto sum = is_realizable(seq({1, 1}, {3}));
  CHECK_FALSE(sum);
  CHECK(sum.failed == Realizability::Clause::DegreeSum);
  const auto order = is_realizable(seq({2, 4, 4}, {4, 6}));
  CHECK_FALSE(order);
  CHECK(order.failed == Realizability::Clause::SyzygyNotAboveGenerator);
  CHECK(order.index == 1);
}

TEST_CASE("Sauer condition") {
  auto r = sauer_condition(seq({2, 2}, {4}));
  CHECK(r.ok);
  r = sauer_condition(seq({2, 2, 4}, {3, 5}));
  CHECK_FALSE(r.ok);
  CHECK(r.witness == std::optional<std::size_t>{1});
  r = sauer_condition(seq({2, 3, 3}, {4, 4}));
  CHECK(r.ok);
  CHECK(r.equalities.empty());
}

TEST_CASE("Sauer equality on ghost data counts as satisfied") {
  // Four points, three on a line: a=(2,2,3), b=(3,4) with b_1 = a_3. The
  // character (3,2) is connected.
  const auto four_points = seq({2, 2, 3}, {3, 4});
  REQUIRE(is_realizable(four_points));
  CHECK(betti_to_character(four_points) == chr({3, 2}));
  const auto r = sauer_condition(four_points);
  CHECK(r.ok);
  CHECK(r.equalities == std::vector<std::size_t>{1});
}

TEST_CASE("classification") {
  auto v = classify(chr({3, 2}));
  CHECK(v.smoothable);
  CHECK(v.connected);
  CHECK(v.sauer_ok);
  v = classify(chr({4, 2}));
  CHECK_FALSE(v.smoothable);
  CHECK(v.witness == std::optional<Int>{1});
  CHECK_FALSE(v.diagnostic);
  CHECK(classify(chr({6})).smoothable);
}

TEST_CASE("corollary check") {
  CHECK(corollary_check(5, 2, true) == CorollaryVerdict::Smoothable);
  CHECK(corollary_check(5, 2, false) == CorollaryVerdict::Inconclusive);
  CHECK(corollary_check(2, 2, true) == CorollaryVerdict::Inconclusive);
  CHECK(corollary_check(7, 3, true) == CorollaryVerdict::Smoothable);
  CHECK(corollary_check(6, 3, true) == CorollaryVerdict::Inconclusive);
}

TEST_CASE("relations between Betti numbers and character") {
  auto report = remark_checks(chr({3, 3}), seq({2, 3, 3}, {4, 4}));
  CHECK(report.all_pass());
  CHECK(report.clauses.size() == 6);
  CHECK(remark_checks(chr({1}), seq({1, 1}, {2})).all_pass());
  CHECK(remark_checks(chr({4, 2}), seq({2, 2, 4}, {3, 5})).all_pass());
  report = remark_checks(chr({4, 2}), seq({2, 2}, {4}));
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("properties over the window") {
  for (const auto& chi : charcore::enumerate_characters(4, 30)) {
    const auto b = minimal_betti(chi);
    CHECK(is_realizable(b));
    CHECK(betti_to_character(b) == chi);
    CHECK(betti_to_hilbert(b, chi.front() + 2) == charcore::hilbert_table(chi));
    CHECK(remark_checks(chi, b).all_pass());
    CHECK(charcore::is_connected(chi) == sauer_condition(b).ok);
    CHECK(sauer_condition(b).equalities.empty());
  }
}

TEST_CASE("ghost pairs are invisible to the Hilbert function") {
  std::mt19937_64 rng(20240611);
  const auto chars = charcore::enumerate_characters(4, 24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& chi = chars[rng() % chars.size()];
    const auto b = minimal_betti(chi);
    const Int window = chi.front() + 6;
    const GhostPairs g{static_cast<Int>(2 + rng() % static_cast<std::uint64_t>(window)),
                       static_cast<Int>(1 + rng() % 3)};
    CHECK(betti_to_hilbert(add_ghosts(b, g), window) == betti_to_hilbert(b, window));
    CHECK(add_ghosts(b, g) == minimal_betti(chi, g));
  }
}
