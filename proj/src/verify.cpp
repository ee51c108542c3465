#include "planechar/verify.hpp"

#include <algorithm>

#include "planechar/hilburch.hpp"

namespace planechar::verify {

using charcore::NumericalCharacter;

bool lemma_holds(const NumericalCharacter& chi, const resolve::ResolutionReport& report, std::string* why) {
  const betti::CountFunction c(chi);
  const auto s = static_cast<Int>(chi.length());
  auto at = [](const std::vector<Int>& v, Int n) {
    return n >= 0 && n < static_cast<Int>(v.size()) ? v[static_cast<std::size_t>(n)] : Int{0};
  };
  if (at(report.alpha, s) != c(s) + 1) {
    if (why) *why = "alpha_s=" + std::to_string(at(report.alpha, s)) + " but c(s)+1=" + std::to_string(c(s) + 1);
    return false;
  }
  for (Int n = s + 1; n <= report.top_degree; ++n) {
    const Int expected = at(report.alpha, n) - c(n) + c(n - 1);
    if (at(report.beta, n) != expected) {
      if (why) {
        *why = "beta_" + std::to_string(n) + "=" + std::to_string(at(report.beta, n)) +
               " but alpha_n - c(n) + c(n-1)=" + std::to_string(expected);
      }
      return false;
    }
  }
  return true;
}

namespace {

void compare(RoundTrip& rt, const resolve::ResolutionReport& report) {
  const NumericalCharacter& chi = rt.character;
  rt.failure.clear();
  const Int window = chi.front() + 2;
  const auto predicted_table = charcore::hilbert_table(chi, window);
  rt.hilbert_match = report.top_degree >= window;
  for (Int n = 0; rt.hilbert_match && n <= window; ++n) {
    rt.hilbert_match = report.hilbert.hilbert[static_cast<std::size_t>(n)] ==
                       predicted_table.hilbert[static_cast<std::size_t>(n)];
  }
  rt.hilbert_match = rt.hilbert_match && report.hilbert.degree == predicted_table.degree;
  if (!rt.hilbert_match) rt.failure = "Hilbert function of the constructed ideal differs";

  rt.betti_match = report.betti.has_value() && *report.betti == rt.predicted;
  if (!rt.betti_match && rt.failure.empty()) {
    rt.failure = "resolved " + (report.betti ? report.betti->to_string() : std::string("<none>")) +
                 " vs predicted " + rt.predicted.to_string();
  }

  std::string why;
  rt.lemma_holds = lemma_holds(chi, report, &why);
  if (!rt.lemma_holds && rt.failure.empty()) rt.failure = "lemma: " + why;

  rt.remarks_hold = report.betti.has_value() && betti::remark_checks(chi, *report.betti).all_pass();
  if (!rt.remarks_hold && rt.failure.empty()) rt.failure = "remark relations fail on the resolved data";
}

resolve::ResolutionReport resolve_constructed(const betti::BettiSequence& seq, const FieldSpec& field) {
  const auto minors = hilburch::maximal_minors(hilburch::build_exi_matrix(seq));
  return resolve::syzygy_betti(resolve::GradedIdeal{minors.minors}, field);
}

}  // namespace

RoundTrip round_trip(const NumericalCharacter& chi, const FieldSpec& field) {
  RoundTrip rt(chi, betti::minimal_betti(chi));
  try {
    rt.report = resolve_constructed(rt.predicted, field);
    compare(rt, *rt.report);
    if (!rt.ok() && field.kind == FieldSpec::Kind::Prime) {
      rt.report = resolve_constructed(rt.predicted, FieldSpec::rational());
      rt.recomputed_over_q = true;
      compare(rt, *rt.report);
    }
  } catch (const Error& e) {
    rt.report.reset();
    rt.hilbert_match = rt.betti_match = rt.lemma_holds = rt.remarks_hold = false;
    rt.failure = e.what();
  }
  return rt;
}

std::vector<PropertyTally> run_selftest(const SelftestOptions& options) {
  const auto characters = charcore::enumerate_characters(options.s_max, options.d_max);

  PropertyTally equivalence{"connected <=> b_n >= a_{n+2}"};
  PropertyTally realizable{"minimal Betti sequence is realizable"};
  PropertyTally inversion{"Betti -> character inverts minimal_betti"};
  PropertyTally hilbert_routes{"Hilbert table: character route = Betti route = h1 formula"};
  PropertyTally remarks{"relations between Betti numbers and character"};
  PropertyTally splitting{"split degree additivity and decomposition round trip"};
  PropertyTally ghosts{"ghost pairs leave the Hilbert function unchanged"};
  PropertyTally probe{"Hilbert-Burch matrix drops rank only at (1:0:0)"};
  PropertyTally oracle_hilbert{"resolved Hilbert function = predicted"};
  PropertyTally oracle_betti{"resolved Betti numbers = minimal_betti"};
  PropertyTally oracle_lemma{"generator/syzygy counts obey the count-function recursion"};
  PropertyTally oracle_remarks{"relations hold on resolved data"};

  for (const auto& chi : characters) {
    const std::string name = chi.to_string();
    const auto seq = betti::minimal_betti(chi);
    const auto sauer = betti::sauer_condition(seq);
    equivalence.record(charcore::is_connected(chi) == sauer.ok, name + " with " + seq.to_string());
    realizable.record(static_cast<bool>(betti::is_realizable(seq)), name + " gives " + seq.to_string());
    bool inverted = false;
    try {
      inverted = betti::betti_to_character(seq) == chi;
    } catch (const Error&) {
    }
    inversion.record(inverted, name);

    const Int window = chi.front() + 2;
    const auto table = charcore::hilbert_table(chi, window);
    bool routes = betti::betti_to_hilbert(seq, window) == table;
    for (Int n = 0; routes && n <= window; ++n) {
      routes = table.h1[static_cast<std::size_t>(n)] == charcore::h1(chi, n);
    }
    hilbert_routes.record(routes, name);
    remarks.record(betti::remark_checks(chi, seq).all_pass(), name);

    bool split_ok = true;
    if (const auto t = charcore::first_gap(chi)) {
      const auto split = charcore::split_at(chi, *t);
      split_ok = charcore::degree(chi) == charcore::degree(split.top) + charcore::degree(split.residual);
      std::vector<Int> rebuilt;
      for (const auto& piece : charcore::decompose(chi)) {
        split_ok = split_ok && charcore::is_connected(piece.character);
        for (Int n : piece.character.entries()) rebuilt.push_back(n + piece.shift);
      }
      split_ok = split_ok && std::equal(rebuilt.begin(), rebuilt.end(), chi.entries().begin(), chi.entries().end());
    }
    splitting.record(split_ok, name);

    const Int ghost_degree = 2 + static_cast<Int>((options.seed + seq.b().back()) % static_cast<std::uint64_t>(window));
    ghosts.record(betti::betti_to_hilbert(betti::add_ghosts(seq, {ghost_degree, 1}), window) ==
                      betti::betti_to_hilbert(seq, window),
                  name + " with ghost degree " + std::to_string(ghost_degree));
  }

  const auto trips = parallel_map(characters, options.jobs, [&](const NumericalCharacter& chi) {
    RoundTrip rt = round_trip(chi, options.field);
    bool probed = false;
    try {
      hilburch::rank_drop_probe(hilburch::build_exi_matrix(rt.predicted), hilburch::kDefaultProbeTrials,
                                options.seed, options.field);
      probed = true;
    } catch (const Error&) {
    }
    return std::pair{std::move(rt), probed};
  });
  for (const auto& [rt, probed] : trips) {
    const std::string name = rt.character.to_string() + ": " + rt.failure;
    probe.record(probed, rt.character.to_string());
    oracle_hilbert.record(rt.hilbert_match, name);
    oracle_betti.record(rt.betti_match, name);
    oracle_lemma.record(rt.lemma_holds, name);
    oracle_remarks.record(rt.remarks_hold, name);
  }

  return {equivalence, realizable, inversion, hilbert_routes, remarks, splitting,
          ghosts,      probe,      oracle_hilbert, oracle_betti, oracle_lemma, oracle_remarks};
}

}  // namespace planechar::verify
