#include "planechar/character.hpp"

#include <algorithm>
#include <sstream>

namespace planechar::charcore {

std::optional<CharacterDefect> NumericalCharacter::check(std::span<const Int> entries) {
  if (entries.empty()) return CharacterDefect{ErrorCode::Empty, 0, "character has no entries"};
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (entries[i] < entries[i + 1]) {
      return CharacterDefect{ErrorCode::NotNonincreasing, i + 1,
                             "n_" + std::to_string(i) + "=" + std::to_string(entries[i]) + " < n_" +
                                 std::to_string(i + 1) + "=" + std::to_string(entries[i + 1])};
    }
  }
  const auto s = static_cast<Int>(entries.size());
  if (entries.back() < s) {
    return CharacterDefect{ErrorCode::TailBelowLength, entries.size() - 1,
                           "n_" + std::to_string(s - 1) + "=" + std::to_string(entries.back()) +
                               " < s=" + std::to_string(s)};
  }
  return std::nullopt;
}

NumericalCharacter NumericalCharacter::make(std::vector<Int> entries) {
  if (auto defect = check(entries)) throw Error(defect->code, defect->message);
  return NumericalCharacter(std::move(entries));
}

std::strong_ordering operator<=>(const NumericalCharacter& x, const NumericalCharacter& y) noexcept {
  if (auto c = x.length() <=> y.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.entries_.begin(), x.entries_.end(),
                                                y.entries_.begin(), y.entries_.end());
}

std::string NumericalCharacter::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ", ";
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

HilbertTable table_from_hilbert(std::vector<Int> hilbert, Int degree) {
  HilbertTable t;
  t.degree = degree;
  const std::size_t n = hilbert.size();
  t.delta.resize(n);
  t.h0.resize(n);
  t.h1.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.delta[i] = hilbert[i] - (i == 0 ? 0 : hilbert[i - 1]);
    t.h0[i] = forms_dim(static_cast<Int>(i)) - hilbert[i];
    t.h1[i] = degree - hilbert[i];
  }
  t.hilbert = std::move(hilbert);
  return t;
}

std::optional<NumericalCharacter> character_from_delta(std::span<const Int> delta) {
  const auto window = static_cast<Int>(delta.size()) - 1;
  Int s = 0;
  while (s <= window && delta[static_cast<std::size_t>(s)] == s + 1) ++s;
  if (s == 0 || s > window) return std::nullopt;
  // n_l = s + #{i >= s : Delta(i) > l}
  std::vector<Int> entries(static_cast<std::size_t>(s), s);
  for (Int i = s; i <= window; ++i) {
    const Int d = delta[static_cast<std::size_t>(i)];
    if (d < 0 || d > s) return std::nullopt;
    for (Int l = 0; l < d; ++l) ++entries[static_cast<std::size_t>(l)];
  }
  if (NumericalCharacter::check(entries)) return std::nullopt;
  NumericalCharacter chi(std::move(entries));
  for (Int i = 0; i <= window; ++i) {
    if (charcore::delta(chi, i) != delta[static_cast<std::size_t>(i)]) return std::nullopt;
  }
  return chi;
}

Int degree(const NumericalCharacter& chi) {
  Int d = 0;
  for (std::size_t i = 0; i < chi.length(); ++i) d = checked_add(d, chi[i] - static_cast<Int>(i));
  return d;
}

Int h1(const NumericalCharacter& chi, Int n) {
  auto plus = [](Int x) { return x > 0 ? x : Int{0}; };
  Int total = 0;
  for (std::size_t i = 0; i < chi.length(); ++i) {
    total += plus(chi[i] - n - 1) - plus(static_cast<Int>(i) - n - 1);
  }
  return total;
}

Int delta(const NumericalCharacter& chi, Int i) {
  const auto s = static_cast<Int>(chi.length());
  if (i < 0) return 0;
  if (i < s) return i + 1;
  return static_cast<Int>(
      std::count_if(chi.entries().begin(), chi.entries().end(), [i](Int n) { return n >= i + 1; }));
}

HilbertTable hilbert_table(const NumericalCharacter& chi, std::optional<Int> window) {
  const Int n0 = chi.front();
  const Int N = window.value_or(n0 + 2);
  if (N < n0) {
    throw Error(ErrorCode::WindowTooSmall,
                "window " + std::to_string(N) + " is below n_0=" + std::to_string(n0));
  }
  std::vector<Int> H(static_cast<std::size_t>(N) + 1);
  Int running = 0;
  for (Int n = 0; n <= N; ++n) {
    running += delta(chi, n);
    H[static_cast<std::size_t>(n)] = running;
  }
  return table_from_hilbert(std::move(H), degree(chi));
}

std::optional<std::size_t> first_gap(const NumericalCharacter& chi) {
  for (std::size_t t = 1; t < chi.length(); ++t) {
    if (chi[t - 1] > chi[t] + 1) return t;
  }
  return std::nullopt;
}

bool is_connected(const NumericalCharacter& chi) { return !first_gap(chi).has_value(); }

SplitResult split_at(const NumericalCharacter& chi, std::size_t t) {
  if (t < 1 || t >= chi.length() || chi[t - 1] <= chi[t] + 1) {
    throw Error(ErrorCode::NoGapAtT, "no gap at t=" + std::to_string(t) + " in " + chi.to_string());
  }
  const auto e = chi.entries();
  std::vector<Int> top(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(t));
  std::vector<Int> residual;
  residual.reserve(chi.length() - t);
  for (std::size_t i = t; i < chi.length(); ++i) residual.push_back(e[i] - static_cast<Int>(t));
  return SplitResult{t, NumericalCharacter::make(std::move(top)),
                     NumericalCharacter::make(std::move(residual))};
}

std::vector<Piece> decompose(const NumericalCharacter& chi) {
  std::vector<Piece> pieces;
  Int shift = 0;
  NumericalCharacter rest = chi;
  while (auto t = first_gap(rest)) {
    SplitResult split = split_at(rest, *t);
    pieces.push_back(Piece{shift, std::move(split.top)});
    shift += static_cast<Int>(*t);
    rest = std::move(split.residual);
  }
  pieces.push_back(Piece{shift, std::move(rest)});
  return pieces;
}

void for_each_character(Int s_max, Int d_max,
                        const std::function<void(const NumericalCharacter&)>& visit) {
  for (Int s = 1; s <= s_max; ++s) {
    // degree = sum(n_i) - s(s-1)/2, so the entry sum is bounded by this.
    const Int budget = d_max + s * (s - 1) / 2;
    if (s * s > budget) break;
    std::vector<Int> prefix;
    std::function<void(Int)> rec = [&](Int sum) {
      const auto i = static_cast<Int>(prefix.size());
      if (i == s) {
        visit(NumericalCharacter::make(prefix));
        return;
      }
      const Int remaining_min = (s - i - 1) * s;
      const Int upper = std::min(i == 0 ? budget : prefix.back(), budget - sum - remaining_min);
      for (Int n = s; n <= upper; ++n) {
        prefix.push_back(n);
        rec(sum + n);
        prefix.pop_back();
      }
    };
    rec(0);
  }
}

std::vector<NumericalCharacter> enumerate_characters(Int s_max, Int d_max) {
  std::vector<NumericalCharacter> out;
  for_each_character(s_max, d_max, [&](const NumericalCharacter& chi) { out.push_back(chi); });
  return out;
}

}  // namespace planechar::charcore
