#include "planechar/resolve.hpp"

#include <algorithm>
#include <numeric>

#include "planechar/linalg.hpp"

namespace planechar::resolve {

using poly::HomogPoly;

int GradedIdeal::max_generator_degree() const noexcept {
  int d = -1;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return d;
}

namespace {

// t = e1 + e2 for every monomial of degree d, indexed like monomials(d).
const std::vector<std::size_t>& t_table(std::vector<std::vector<std::size_t>>& cache, int d) {
  while (static_cast<int>(cache.size()) <= d) {
    std::vector<std::size_t> t;
    for (const auto& e : poly::monomials(static_cast<int>(cache.size()))) {
      t.push_back(static_cast<std::size_t>(e.e1 + e.e2));
    }
    cache.push_back(std::move(t));
  }
  return cache[static_cast<std::size_t>(d)];
}

template <class Field>
std::vector<typename Field::Elem> to_vector(const Field& field, const HomogPoly& f) {
  std::vector<typename Field::Elem> v;
  v.reserve(f.coefficients().size());
  for (Int c : f.coefficients()) v.push_back(field.from_int(c));
  return v;
}

std::vector<HomogPoly> sorted_nonzero(std::span<const HomogPoly> gens) {
  std::vector<HomogPoly> out;
  for (const auto& g : gens) {
    if (!g.is_zero()) out.push_back(g);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HomogPoly& x, const HomogPoly& y) { return x.degree() < y.degree(); });
  return out;
}

// Degree-by-degree spans I_0, I_1, ... built as R_1 I_{d-1} + new generators.
template <class Field>
class IdealSweep {
 public:
  using Span = linalg::EchelonSpan<Field>;

  IdealSweep(const Field& field, std::span<const HomogPoly> generators)
      : field_(field), generators_(sorted_nonzero(generators)) {}

  int degree() const noexcept { return degree_; }
  Int dimension(int d) const { return dims_[static_cast<std::size_t>(d)]; }
  Int alpha(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
  const std::vector<HomogPoly>& kept() const noexcept { return kept_; }
  const std::vector<HomogPoly>& input() const noexcept { return generators_; }
  const Span& current() const { return *span_; }

  void advance() {
    const int d = degree_ + 1;
    Span next(field_, static_cast<std::size_t>(forms_dim(d)));
    if (span_) {
      const auto& t = t_table(t_cache_, degree_);
      for (int v = 0; v < 3; ++v) {
        for (const auto& row : span_->rows()) {
          std::vector<typename Field::Elem> shifted(next.dim(), field_.zero());
          for (std::size_t q = 0; q < row.size(); ++q) {
            if (!field_.is_zero(row[q])) shifted[poly::shifted_index(q, t[q], v)] = row[q];
          }
          next.insert(std::move(shifted));
        }
      }
    }
    const auto from_below = static_cast<Int>(next.rank());
    while (cursor_ < generators_.size() && generators_[cursor_].degree() == d) {
      if (next.insert(to_vector(field_, generators_[cursor_]))) kept_.push_back(generators_[cursor_]);
      ++cursor_;
    }
    dims_.push_back(static_cast<Int>(next.rank()));
    alpha_.push_back(static_cast<Int>(next.rank()) - from_below);
    span_.emplace(std::move(next));
    degree_ = d;
  }

  void advance_to(int d) {
    while (degree_ < d) advance();
  }

  Int hilbert(int d) const { return forms_dim(d) - dimension(d); }

 private:
  Field field_;
  std::vector<HomogPoly> generators_;
  std::size_t cursor_ = 0;
  int degree_ = -1;
  std::optional<Span> span_;
  std::vector<Int> dims_;
  std::vector<Int> alpha_;
  std::vector<HomogPoly> kept_;
  std::vector<std::vector<std::size_t>> t_cache_;
};

// Coordinates of the free module sum_i R(-a_i) in degree d: block i holds
// the degree d - a_i monomials, in generator order.
struct ModuleLayout {
  std::vector<std::size_t> offset;
  std::vector<int> local_degree;
  std::size_t size = 0;

  ModuleLayout(std::span<const HomogPoly> gens, int d) {
    for (const auto& g : gens) {
      offset.push_back(size);
      local_degree.push_back(d - g.degree());
      size += static_cast<std::size_t>(forms_dim(d - g.degree()));
    }
  }
};

// Matrix of v -> sum_i v_i g_i from degree-d module coordinates to degree-d
// forms.
template <class Field>
linalg::Matrix<Field> evaluation_matrix(const Field& field, std::span<const HomogPoly> gens, int d) {
  const ModuleLayout layout(gens, d);
  linalg::Matrix<Field> m(field, static_cast<std::size_t>(forms_dim(d)), layout.size);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (layout.local_degree[i] < 0) continue;
    const auto multipliers = poly::monomials(layout.local_degree[i]);
    const auto terms = poly::monomials(gens[i].degree());
    for (std::size_t q = 0; q < multipliers.size(); ++q) {
      for (std::size_t r = 0; r < terms.size(); ++r) {
        const Int c = gens[i].coefficients()[r];
        if (c == 0) continue;
        m(poly::monomial_index(multipliers[q] + terms[r]), layout.offset[i] + q) = field.from_int(c);
      }
    }
  }
  return m;
}

template <class Field>
ResolutionReport sweep_resolution(const Field& field, const GradedIdeal& ideal, const Options& options) {
  IdealSweep<Field> ideal_sweep(field, ideal.generators);
  const int max_input = ideal.max_generator_degree();

  using Vector = std::vector<typename Field::Elem>;
  std::vector<Vector> syzygy_basis;  // K_{d-1}
  std::vector<Int> syzygy_degrees;   // degree of each minimal syzygy found
  std::vector<Int> beta;
  std::vector<std::vector<std::size_t>> t_cache;
  std::optional<int> top;

  for (int d = 0;; ++d) {
    if (d > options.max_degree) {
      throw Error(ErrorCode::NotStabilized,
                  "Hilbert function still changing at degree " + std::to_string(options.max_degree));
    }
    ideal_sweep.advance_to(d);
    const auto& gens = ideal_sweep.kept();

    const ModuleLayout layout(gens, d);
    linalg::EchelonSpan<Field> span(field, layout.size);
    if (!syzygy_basis.empty()) {
      const ModuleLayout previous(gens, d - 1);
      for (int v = 0; v < 3; ++v) {
        for (const auto& row : syzygy_basis) {
          Vector shifted(layout.size, field.zero());
          for (std::size_t i = 0; i < gens.size(); ++i) {
            if (previous.local_degree[i] < 0) continue;
            const auto& t = t_table(t_cache, previous.local_degree[i]);
            const std::size_t width = static_cast<std::size_t>(forms_dim(previous.local_degree[i]));
            for (std::size_t q = 0; q < width; ++q) {
              const auto& c = row[previous.offset[i] + q];
              if (field.is_zero(c)) continue;
              shifted[layout.offset[i] + poly::shifted_index(q, t[q], v)] = c;
            }
          }
          span.insert(std::move(shifted));
        }
      }
    }

    Int free_rank = 0;
    for (Int e : syzygy_degrees) free_rank += forms_dim(d - e);
    const auto from_below = static_cast<Int>(span.rank());
    if (from_below < free_rank) {
      throw Error(ErrorCode::UnexpectedDepth,
                  "relation among syzygies in degree " + std::to_string(d) +
                      "; the ideal has no length-one resolution");
    }
    const Int kernel_dim = static_cast<Int>(layout.size) - ideal_sweep.dimension(d);
    if (kernel_dim > from_below) {
      for (auto& v : linalg::kernel_basis(field, evaluation_matrix(field, std::span<const HomogPoly>(gens), d))) {
        span.insert(std::move(v));
      }
    }
    const Int fresh = static_cast<Int>(span.rank()) - from_below;
    if (static_cast<Int>(span.rank()) != kernel_dim) {
      throw Error(ErrorCode::UnexpectedDepth, "syzygy dimension count failed in degree " + std::to_string(d));
    }
    beta.push_back(fresh);
    syzygy_degrees.insert(syzygy_degrees.end(), static_cast<std::size_t>(fresh), d);
    syzygy_basis = span.rows();

    if (!top && d >= std::max(max_input, 1) && ideal_sweep.hilbert(d) == ideal_sweep.hilbert(d - 1)) {
      top = d + 2;
    }
    if (top && d == *top) break;
  }

  const int last = *top;
  ResolutionReport report;
  report.field = field.name();
  report.top_degree = last;
  std::vector<Int> H;
  for (int d = 0; d <= last; ++d) {
    report.alpha.push_back(ideal_sweep.alpha(d));
    H.push_back(ideal_sweep.hilbert(d));
  }
  report.beta = beta;
  if (beta[static_cast<std::size_t>(last)] != 0 || H[static_cast<std::size_t>(last)] != H[static_cast<std::size_t>(last - 1)]) {
    throw Error(ErrorCode::NotStabilized, "resolution data continues past degree " + std::to_string(last));
  }
  report.generators = ideal_sweep.kept();
  report.hilbert = charcore::table_from_hilbert(std::move(H), ideal_sweep.hilbert(last));

  const auto r = static_cast<Int>(report.generators.size());
  const auto k = static_cast<Int>(syzygy_degrees.size());
  if (r > 0 && k != r - 1) {
    throw Error(ErrorCode::UnexpectedDepth, std::to_string(r) + " minimal generators but " +
                                                std::to_string(k) + " minimal syzygies");
  }
  if (k >= 1) {
    std::vector<Int> a;
    for (const auto& g : report.generators) a.push_back(g.degree());
    report.betti = betti::BettiSequence::make(std::move(a), syzygy_degrees);
  }
  return report;
}

}  // namespace

Int ideal_dimension(const GradedIdeal& ideal, int n, const FieldSpec& spec) {
  if (n < 0) return 0;
  return with_field(spec, [&](const auto& field) {
    IdealSweep sweep(field, ideal.generators);
    sweep.advance_to(n);
    return sweep.dimension(n);
  });
}

charcore::HilbertTable hilbert_of_quotient(const GradedIdeal& ideal, int window, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    IdealSweep sweep(field, ideal.generators);
    std::vector<Int> H;
    for (int d = 0; d <= window; ++d) {
      sweep.advance_to(d);
      H.push_back(sweep.hilbert(d));
    }
    if (window < 1 || H[static_cast<std::size_t>(window)] != H[static_cast<std::size_t>(window - 1)]) {
      throw Error(ErrorCode::NotStabilized,
                  "Hilbert function not constant at degree " + std::to_string(window));
    }
    const Int deg = H.back();
    return charcore::table_from_hilbert(std::move(H), deg);
  });
}

GeneratorCounts minimal_generators(const GradedIdeal& ideal, const FieldSpec& spec) {
  return with_field(spec, [&](const auto& field) {
    IdealSweep sweep(field, ideal.generators);
    GeneratorCounts out;
    const int top = ideal.max_generator_degree();
    for (int d = 0; d <= top; ++d) {
      sweep.advance_to(d);
      out.alpha.push_back(sweep.alpha(d));
    }
    out.generators = sweep.kept();
    return out;
  });
}

ResolutionReport syzygy_betti(const GradedIdeal& ideal, const FieldSpec& spec, const Options& options) {
  return with_field(spec, [&](const auto& field) { return sweep_resolution(field, ideal, options); });
}

bool in_syzygy_module(std::span<const HomogPoly> generators,
                      std::span<const std::optional<HomogPoly>> coefficients, const FieldSpec& spec) {
  if (generators.size() != coefficients.size()) {
    throw Error(ErrorCode::DegreeMismatch, "one coefficient per generator is required");
  }
  std::optional<int> d;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& c = coefficients[i];
    if (!c || c->is_zero()) continue;
    const int total = c->degree() + generators[i].degree();
    if (d && *d != total) throw Error(ErrorCode::DegreeMismatch, "syzygy is not homogeneous");
    d = total;
  }
  if (!d) return true;
  return with_field(spec, [&](const auto& field) {
    using FieldT = std::decay_t<decltype(field)>;
    const ModuleLayout layout(generators, *d);
    linalg::EchelonSpan<FieldT> kernel(field, layout.size);
    for (auto& v : linalg::kernel_basis(field, evaluation_matrix(field, generators, *d))) {
      kernel.insert(std::move(v));
    }
    std::vector<typename FieldT::Elem> candidate(layout.size, field.zero());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto& c = coefficients[i];
      if (!c || c->is_zero()) continue;
      for (std::size_t q = 0; q < c->coefficients().size(); ++q) {
        candidate[layout.offset[i] + q] = field.from_int(c->coefficients()[q]);
      }
    }
    return kernel.contains(std::move(candidate));
  });
}

bool contains(const GradedIdeal& ideal, const HomogPoly& f, const FieldSpec& spec) {
  if (f.is_zero()) return true;
  return with_field(spec, [&](const auto& field) {
    IdealSweep sweep(field, ideal.generators);
    sweep.advance_to(f.degree());
    return sweep.current().contains(to_vector(field, f));
  });
}

std::optional<charcore::NumericalCharacter> character_of(const ResolutionReport& report) {
  auto chi = charcore::character_from_delta(report.hilbert.delta);
  if (chi && charcore::degree(*chi) != report.hilbert.degree) return std::nullopt;
  return chi;
}

}  // namespace planechar::resolve
