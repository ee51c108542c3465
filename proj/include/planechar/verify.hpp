#pragma once

// End-to-end property checks shared by the selftest subcommand and the
// acceptance suite.

#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/character.hpp"
#include "planechar/field.hpp"
#include "planechar/resolve.hpp"

namespace planechar::verify {

// Construct the explicit ideal for minimal_betti(chi), resolve it, and
// compare every invariant with the character-side prediction.
struct RoundTrip {
  RoundTrip(charcore::NumericalCharacter chi, betti::BettiSequence seq)
      : character(std::move(chi)), predicted(std::move(seq)) {}

  charcore::NumericalCharacter character;
  betti::BettiSequence predicted;
  std::optional<resolve::ResolutionReport> report;
  bool hilbert_match = false;
  bool betti_match = false;
  bool lemma_holds = false;
  bool remarks_hold = false;
  // Prime-field result disagreed and the numbers come from Q instead.
  bool recomputed_over_q = false;
  std::string failure;

  bool ok() const noexcept { return hilbert_match && betti_match && lemma_holds && remarks_hold; }
};

RoundTrip round_trip(const charcore::NumericalCharacter& chi, const FieldSpec& field);

// alpha_s = c(s) + 1 and beta_n = alpha_n - c(n) + c(n-1) for every n > s
// in the report window. On failure `why` names the degree.
bool lemma_holds(const charcore::NumericalCharacter& chi, const resolve::ResolutionReport& report,
                 std::string* why = nullptr);

struct PropertyTally {
  explicit PropertyTally(std::string property) : name(std::move(property)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string counterexample;  // first failure in enumeration order

  bool ok() const noexcept { return failed == 0; }
  void record(bool pass, const std::string& what) {
    ++checked;
    if (pass) return;
    if (failed++ == 0) counterexample = what;
  }
};

struct SelftestOptions {
  Int s_max = 3;
  Int d_max = 15;
  FieldSpec field;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eedf00dULL;
};

std::vector<PropertyTally> run_selftest(const SelftestOptions& options);

// Applies fn to every item on `jobs` worker threads; results keep the input
// order. The first exception thrown by fn is rethrown after all workers stop.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, unsigned jobs, Fn&& fn) {
  using Out = std::decay_t<std::invoke_result_t<Fn&, const In&>>;
  std::vector<std::optional<Out>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next++) < items.size();) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace planechar::verify
