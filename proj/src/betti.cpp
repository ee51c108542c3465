#include "planechar/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace planechar::betti {

namespace {

std::string join(std::span<const Int> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

Int sum(std::span<const Int> v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, x);
  return s;
}

}  // namespace

BettiSequence BettiSequence::make(std::vector<Int> a, std::vector<Int> b) {
  if (b.empty() || a.size() != b.size() + 1) {
    throw Error(ErrorCode::InvalidBetti, "need k >= 1 syzygy degrees and k+1 generator degrees, got " +
                                             std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.front() < 1) throw Error(ErrorCode::InvalidBetti, "generator degrees must be positive");
  if (b.front() < 2) throw Error(ErrorCode::InvalidBetti, "syzygy degrees must be at least 2");
  return BettiSequence(std::move(a), std::move(b));
}

std::string BettiSequence::to_string() const { return "a=" + join(a_) + ", b=" + join(b_); }

CountFunction::CountFunction(const NumericalCharacter& chi)
    : low_(chi.back()), counts_(static_cast<std::size_t>(chi.front() - chi.back() + 1), 0) {
  for (Int n : chi.entries()) ++counts_[static_cast<std::size_t>(n - low_)];
  total_ = static_cast<Int>(chi.length());
}

Int CountFunction::operator()(Int n) const noexcept {
  if (n < low_ || n >= low_ + static_cast<Int>(counts_.size())) return 0;
  return counts_[static_cast<std::size_t>(n - low_)];
}

CountFunction counts(const NumericalCharacter& chi) { return CountFunction(chi); }

BettiSequence minimal_betti(const NumericalCharacter& chi, std::optional<GhostPairs> ghosts) {
  const CountFunction c(chi);
  const auto s = static_cast<Int>(chi.length());
  std::vector<Int> a(static_cast<std::size_t>(c(s) + 1), s);
  std::vector<Int> b;
  for (Int n = s + 1; n <= chi.front() + 1; ++n) {
    const Int d = c(n) - c(n - 1);
    if (d > 0) a.insert(a.end(), static_cast<std::size_t>(d), n);
    if (d < 0) b.insert(b.end(), static_cast<std::size_t>(-d), n);
  }
  BettiSequence seq = BettiSequence::make(std::move(a), std::move(b));
  return ghosts ? add_ghosts(seq, *ghosts) : seq;
}

BettiSequence add_ghosts(const BettiSequence& seq, GhostPairs ghosts) {
  std::vector<Int> a(seq.a().begin(), seq.a().end());
  std::vector<Int> b(seq.b().begin(), seq.b().end());
  a.insert(a.end(), static_cast<std::size_t>(ghosts.count), ghosts.degree);
  b.insert(b.end(), static_cast<std::size_t>(ghosts.count), ghosts.degree);
  return BettiSequence::make(std::move(a), std::move(b));
}

namespace {

Int hilbert_at(const BettiSequence& seq, Int n) {
  Int h0 = 0;
  for (Int a : seq.a()) h0 = checked_add(h0, forms_dim(n - a));
  for (Int b : seq.b()) h0 = checked_sub(h0, forms_dim(n - b));
  return forms_dim(n) - h0;
}

}  // namespace

HilbertTable betti_to_hilbert(const BettiSequence& seq, Int window) {
  if (sum(seq.a()) != sum(seq.b())) {
    throw Error(ErrorCode::NotRealizable, "degree sums differ for " + seq.to_string());
  }
  if (window < 0) throw Error(ErrorCode::WindowTooSmall, "negative window");
  // Past max(b) - 2 every binomial is polynomial in n and the quadratic and
  // linear parts cancel, so H is constant there.
  const Int stable = std::max<Int>(seq.b().back(), 0);
  const Int degree = hilbert_at(seq, stable);
  const Int top = std::max(window, stable);
  Int previous = 0;
  std::vector<Int> H;
  for (Int n = 0; n <= top; ++n) {
    const Int h = hilbert_at(seq, n);
    if (h < 0 || h > forms_dim(n) || h < previous) {
      throw Error(ErrorCode::NegativeDimension,
                  "inconsistent Hilbert value H(" + std::to_string(n) + ")=" + std::to_string(h) +
                      " for " + seq.to_string());
    }
    previous = h;
    if (n <= window) H.push_back(h);
  }
  return charcore::table_from_hilbert(std::move(H), degree);
}

NumericalCharacter betti_to_character(const BettiSequence& seq) {
  const Int window = seq.b().back() + 1;
  const HilbertTable t = betti_to_hilbert(seq, window);
  auto chi = charcore::character_from_delta(t.delta);
  if (!chi) {
    throw Error(ErrorCode::NotACharacter,
                "Delta of " + seq.to_string() + " is not the first difference of a character");
  }
  return *chi;
}

Realizability is_realizable(const BettiSequence& seq) {
  Realizability r;
  const Int sa = sum(seq.a());
  const Int sb = sum(seq.b());
  if (sa != sb) {
    r.failed = Realizability::Clause::DegreeSum;
    r.message = "sum of b (" + std::to_string(sb) + ") != sum of a (" + std::to_string(sa) + ")";
    return r;
  }
  for (std::size_t j = 0; j < seq.k(); ++j) {
    if (seq.b()[j] <= seq.a()[j + 1]) {
      r.failed = Realizability::Clause::SyzygyNotAboveGenerator;
      r.index = j + 1;
      r.message = "b_" + std::to_string(j + 1) + "=" + std::to_string(seq.b()[j]) + " <= a_" +
                  std::to_string(j + 2) + "=" + std::to_string(seq.a()[j + 1]);
      return r;
    }
  }
  return r;
}

SauerResult sauer_condition(const BettiSequence& seq) {
  SauerResult r;
  for (std::size_t n = 1; n + 1 <= seq.k(); ++n) {
    const Int b = seq.b()[n - 1];
    const Int a = seq.a()[n + 1];
    if (b == a) r.equalities.push_back(n);
    if (b < a && !r.witness) {
      r.ok = false;
      r.witness = n;
    }
  }
  return r;
}

Verdict classify(const NumericalCharacter& chi) {
  Verdict v;
  const auto gap = charcore::first_gap(chi);
  v.connected = !gap.has_value();
  if (gap) v.witness = static_cast<Int>(*gap);
  v.sauer_ok = sauer_condition(minimal_betti(chi)).ok;
  v.smoothable = v.connected;
  if (v.connected != v.sauer_ok) {
    v.diagnostic = "connectedness and the Betti inequality disagree on " + chi.to_string();
  }
  return v;
}

std::string_view to_string(CorollaryVerdict v) noexcept {
  return v == CorollaryVerdict::Smoothable ? "smoothable" : "inconclusive";
}

CorollaryVerdict corollary_check(Int d, Int s, bool on_integral_surface) {
  if (on_integral_surface && d > checked_mul(s, s - 1)) return CorollaryVerdict::Smoothable;
  return CorollaryVerdict::Inconclusive;
}

bool RemarkReport::all_pass() const noexcept {
  return std::all_of(clauses.begin(), clauses.end(), [](const RemarkClause& c) { return c.pass; });
}

RemarkReport remark_checks(const NumericalCharacter& chi, const BettiSequence& seq) {
  RemarkReport report;
  const auto s = static_cast<Int>(chi.length());
  const Int n0 = chi.front();
  const auto a = seq.a();
  const auto b = seq.b();
  auto add = [&](std::string name, Int lhs, Int rhs, bool pass) {
    report.clauses.push_back(
        RemarkClause{std::move(name), pass, std::to_string(lhs) + " vs " + std::to_string(rhs)});
  };
  add("a_1 = s", a[0], s, a[0] == s);
  add("a_2 = n_{s-1}", a[1], chi.back(), a[1] == chi.back());
  const Int bk = b.back();
  add("b_k = n_0 + 1", bk, n0 + 1, bk == n0 + 1);
  const auto top_b = static_cast<Int>(std::count(b.begin(), b.end(), bk));
  const auto top_n = static_cast<Int>(std::count(chi.entries().begin(), chi.entries().end(), n0));
  add("#{b_j = b_k} = #{n_i = n_0}", top_b, top_n, top_b == top_n);
  const Int h = charcore::h1(chi, bk - 3);
  add("#{n_i = n_0} = h1(b_k - 3)", top_n, h, top_n == h);
  add("a_{k+1} <= n_0", a.back(), n0, a.back() <= n0);
  return report;
}

}  // namespace planechar::betti
