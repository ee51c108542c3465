// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime budgets are part of the criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/character.hpp"
#include "planechar/hilburch.hpp"
#include "planechar/resolve.hpp"
#include "planechar/verify.hpp"

using namespace planechar;
using charcore::NumericalCharacter;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
  std::string note;

  void record(bool pass, const std::string& what) {
    ++checked;
    if (!pass && failed++ == 0) first_failure = what;
  }
};

struct Criterion {
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string name(const NumericalCharacter& chi) { return chi.to_string(); }

const std::vector<NumericalCharacter>& sweep() {
  static const auto all = charcore::enumerate_characters(4, 30);
  return all;
}

std::vector<NumericalCharacter> round_trip_window() {
  std::vector<NumericalCharacter> out;
  for (const auto& chi : sweep()) {
    if (charcore::degree(chi) <= 20) out.push_back(chi);
  }
  return out;
}

// Resolved data for the round-trip window over F_32003, computed once and
// shared by the criteria that read it.
const std::vector<verify::RoundTrip>& prime_trips() {
  static const auto trips = verify::parallel_map(round_trip_window(), jobs(), [](const NumericalCharacter& chi) {
    return verify::round_trip(chi, FieldSpec{});
  });
  return trips;
}

bool same_hilbert_window(const NumericalCharacter& chi, const resolve::ResolutionReport& r) {
  const auto t = charcore::hilbert_table(chi, chi.front() + 2);
  if (r.top_degree < chi.front() + 2 || r.hilbert.degree != t.degree) return false;
  return std::equal(t.hilbert.begin(), t.hilbert.end(), r.hilbert.hilbert.begin());
}

Outcome connected_iff_sauer() {
  Outcome o;
  std::size_t equalities = 0;
  for (const auto& chi : sweep()) {
    const auto s = betti::sauer_condition(betti::minimal_betti(chi));
    equalities += s.equalities.size();
    o.record(charcore::is_connected(chi) == s.ok, name(chi));
  }
  o.note = std::to_string(equalities) + " boundary equalities";
  return o;
}

Outcome construction_round_trip() {
  Outcome o;
  for (const auto& rt : prime_trips()) {
    const bool hilbert = rt.report && same_hilbert_window(rt.character, *rt.report);
    const bool betti = rt.report && rt.report->betti == rt.predicted;
    o.record(hilbert && betti && !rt.recomputed_over_q, name(rt.character) + ": " + rt.failure);
  }
  return o;
}

Outcome lemma_on_oracle() {
  Outcome o;
  for (const auto& rt : prime_trips()) {
    std::string why = "no report";
    o.record(rt.report && verify::lemma_holds(rt.character, *rt.report, &why), name(rt.character) + ": " + why);
  }
  return o;
}

Outcome relations_on_oracle() {
  Outcome o;
  for (const auto& rt : prime_trips()) {
    bool pass = false;
    std::string why = "no resolved Betti data";
    if (rt.report && rt.report->betti) {
      const auto report = betti::remark_checks(rt.character, *rt.report->betti);
      pass = report.all_pass();
      for (const auto& c : report.clauses) {
        if (!c.pass) {
          why = c.name + " (" + c.detail + ")";
          break;
        }
      }
    }
    o.record(pass, name(rt.character) + ": " + why);
  }
  return o;
}

Outcome splitting() {
  Outcome o;
  for (const auto& chi : sweep()) {
    if (charcore::is_connected(chi)) continue;
    const auto t = charcore::first_gap(chi);
    const auto split = charcore::split_at(chi, *t);
    bool pass = charcore::degree(chi) == charcore::degree(split.top) + charcore::degree(split.residual);
    std::vector<Int> rebuilt;
    for (const auto& piece : charcore::decompose(chi)) {
      pass = pass && charcore::is_connected(piece.character);
      for (Int n : piece.character.entries()) rebuilt.push_back(n + piece.shift);
    }
    pass = pass && std::equal(rebuilt.begin(), rebuilt.end(), chi.entries().begin(), chi.entries().end());
    o.record(pass, name(chi));
  }
  return o;
}

Outcome named_instances() {
  struct Instance {
    std::vector<Int> chi, a, b;
    std::optional<std::size_t> witness;
  };
  const std::vector<Instance> instances{
      {{1}, {1, 1}, {2}, std::nullopt},
      {{3, 2}, {2, 2}, {4}, std::nullopt},
      {{3, 3}, {2, 3, 3}, {4, 4}, std::nullopt},
      {{4, 2}, {2, 2, 4}, {3, 5}, 1},
  };
  Outcome o;
  for (const auto& in : instances) {
    const auto chi = NumericalCharacter::make(in.chi);
    const auto expected = betti::BettiSequence::make(in.a, in.b);
    const auto lemma_route = betti::minimal_betti(chi);
    o.record(lemma_route == expected, name(chi) + " from the count function");
    const auto minors = hilburch::maximal_minors(hilburch::build_exi_matrix(expected));
    const auto report = resolve::syzygy_betti(resolve::GradedIdeal{minors.minors});
    o.record(report.betti == expected, name(chi) + " from the syzygy oracle");
    o.record(resolve::character_of(report) == chi, name(chi) + " recovered from the oracle's Hilbert function");
    o.record(betti::sauer_condition(expected).witness == in.witness, name(chi) + " witness");
  }
  return o;
}

Outcome ghost_invariance() {
  Outcome o;
  std::mt19937_64 rng(0x6105751ULL);
  const auto& chars = sweep();
  for (int trial = 0; trial < 50; ++trial) {
    const auto& chi = chars[rng() % chars.size()];
    const auto seq = betti::minimal_betti(chi);
    const Int t = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(chi.front() + 3));
    const Int window = std::max(seq.b().back(), t) + 3;
    const auto with_ghost = betti::add_ghosts(seq, {std::max<Int>(t, 2), 1});
    o.record(betti::betti_to_hilbert(with_ghost, window) == betti::betti_to_hilbert(seq, window),
             name(chi) + " ghost degree " + std::to_string(t));
  }
  return o;
}

Outcome field_robustness() {
  const auto& trips = prime_trips();
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < 25; ++i) picks.push_back(i * (trips.size() - 1) / 24);
  std::vector<NumericalCharacter> sample;
  for (auto i : picks) sample.push_back(trips[i].character);
  const auto rational = verify::parallel_map(sample, jobs(), [](const NumericalCharacter& chi) {
    return verify::round_trip(chi, FieldSpec::rational());
  });
  Outcome o;
  for (std::size_t n = 0; n < picks.size(); ++n) {
    const auto& p = trips[picks[n]];
    const auto& q = rational[n];
    bool same = p.report && q.report && q.ok();
    if (same) {
      const auto& a = *p.report;
      const auto& b = *q.report;
      same = a.top_degree == b.top_degree && a.alpha == b.alpha && a.beta == b.beta && a.betti == b.betti &&
             a.hilbert == b.hilbert;
    }
    o.record(same, name(q.character) + ": " + q.failure);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"connected <=> b_n >= a_{n+2} for every character with s <= 4, deg <= 30", 10, connected_iff_sauer},
      {"constructed ideals reproduce H up to n0+2 and the minimal Betti numbers (deg <= 20, F_32003)", 300,
       construction_round_trip},
      {"resolved generator/syzygy counts satisfy alpha_s = c(s)+1, beta_n = alpha_n - c(n) + c(n-1)", 300,
       lemma_on_oracle},
      {"relations a_1 = s, a_2 = n_{s-1}, b_k = n0+1, top multiplicities, a_{k+1} <= n0 on resolved data", 300,
       relations_on_oracle},
      {"non-connected characters: degree additivity and decomposition round trip", 10, splitting},
      {"named instances (1), (3,2), (3,3), (4,2) by both routes", 10, named_instances},
      {"ghost pairs leave the Hilbert function unchanged (50 seeded cases)", 10, ghost_invariance},
      {"rational and prime resolutions agree on a 25-character subsample", 120, field_robustness},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failed == 0 && o.checked > 0 && secs <= c.budget_seconds;
    failures += pass ? 0 : 1;
    std::printf("%s [%zu/%zu] %s: %zu/%zu checks, %.2fs (budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria.size(), c.title.c_str(), o.checked - o.failed, o.checked, secs, c.budget_seconds,
                o.note.empty() ? "" : ", ", o.note.c_str());
    if (o.failed) std::printf("     first failure: %s\n", o.first_failure.c_str());
  }
  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ALL CRITERIA PASS");
  return failures ? 1 : 0;
}
