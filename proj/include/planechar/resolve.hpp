#pragma once

// Graded invariants of an explicitly given homogeneous ideal in k[x0,x1,x2],
// computed degree by degree with exact linear algebra and nothing else:
//   dim I_n           rank of the monomial multiples of the generators
//   alpha_d           dim I_d - dim(R_1 I_{d-1})
//   beta_d            dim K_d - dim(R_1 K_{d-1}), K the module of syzygies
// The inputs are analyzed as given; no saturation is performed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planechar/betti.hpp"
#include "planechar/character.hpp"
#include "planechar/field.hpp"
#include "planechar/poly.hpp"

namespace planechar::resolve {

struct GradedIdeal {
  std::vector<poly::HomogPoly> generators;

  int max_generator_degree() const noexcept;
};

struct GeneratorCounts {
  std::vector<Int> alpha;                    // alpha[d], d = 0..max input degree
  std::vector<poly::HomogPoly> generators;   // trimmed, ascending degree
};

struct ResolutionReport {
  std::string field;
  Int top_degree = 0;                        // last degree swept
  std::vector<Int> alpha;                    // alpha[d], d = 0..top_degree
  std::vector<Int> beta;                     // beta[d], d = 0..top_degree
  std::vector<poly::HomogPoly> generators;   // minimal generators, trimmed from the input
  std::optional<betti::BettiSequence> betti; // absent for principal or unit ideals
  charcore::HilbertTable hilbert;            // of the quotient, degrees 0..top_degree
};

struct Options {
  // NotStabilized if the Hilbert function is still moving at this degree.
  int max_degree = 96;
};

Int ideal_dimension(const GradedIdeal& ideal, int n, const FieldSpec& field = {});

// NotStabilized unless H(N) = H(N-1).
charcore::HilbertTable hilbert_of_quotient(const GradedIdeal& ideal, int window,
                                           const FieldSpec& field = {});

GeneratorCounts minimal_generators(const GradedIdeal& ideal, const FieldSpec& field = {});

// Sweeps until two degrees past the first degree n >= max generator degree
// with Delta(n) = 0, and requires the last degree to carry no syzygies.
// UnexpectedDepth if the syzygies themselves satisfy a relation, or the
// syzygy count is not one less than the generator count.
ResolutionReport syzygy_betti(const GradedIdeal& ideal, const FieldSpec& field = {},
                              const Options& options = {});

// Whether sum_i coefficients[i] * generators[i] = 0 is witnessed by the
// computed kernel of the degree-d evaluation map. Every nonzero term must
// have the same total degree.
bool in_syzygy_module(std::span<const poly::HomogPoly> generators,
                      std::span<const std::optional<poly::HomogPoly>> coefficients,
                      const FieldSpec& field = {});

bool contains(const GradedIdeal& ideal, const poly::HomogPoly& f, const FieldSpec& field = {});

// Quotient character read off the computed Hilbert function, if it is one.
std::optional<charcore::NumericalCharacter> character_of(const ResolutionReport& report);

}  // namespace planechar::resolve
