#pragma once

// Characters from permutation weights. The coefficient of q^M collects,
// over the permutation weights of depth M, signature times the Schur
// function of mu^+ - rho. At u = (1,...,1) the Schur function is a Weyl
// dimension; at a generic point it is alternant(mu^+) / alternant(rho).

#include <cstddef>
#include <vector>

#include "affchar/affine_orbits.hpp"
#include "affchar/numeric.hpp"
#include "affchar/qseries.hpp"
#include "affchar/symmetric_functions.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

inline IntSeries signed_dimension_series(const PermutationWeightSet& pws, int trunc) {
  if (trunc > pws.max_depth()) {
    throw LatticeError("series order " + std::to_string(trunc) + " exceeds enumerated depth " +
                       std::to_string(pws.max_depth()));
  }
  IntSeries out(trunc);
  for (const auto& pw : pws) {
    if (pw.depth > trunc) break;
    out.add_term(static_cast<int>(pw.depth), pw.sign * weyl_dimension(pw.lambda_labels));
  }
  return out;
}

struct CharacterSeries {
  AffineDominant dom;
  int max_depth;
  IntSeries numerator;    // orbit of rho~ + Lambda^+
  IntSeries denominator;  // orbit of rho~
  IntSeries chi;
};

inline CharacterSeries normalized_character(const AffineDominant& dom, int max_depth,
                                            EnumerationMethod method = EnumerationMethod::translation) {
  if (max_depth < 0) throw LatticeError("maximum depth must be non-negative");
  const auto num_set = permutation_weights(dom, max_depth, method);
  const auto den_set = permutation_weights(AffineDominant::trivial(dom.rank()), max_depth, method);
  IntSeries num = signed_dimension_series(num_set, max_depth);
  IntSeries den = signed_dimension_series(den_set, max_depth);
  IntSeries chi = num / den;
  return CharacterSeries{dom, max_depth, std::move(num), std::move(den), std::move(chi)};
}

/// Numerator and denominator of the character at u, graded by depth.
struct GradedPointCharacter {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
};

inline std::vector<Rational> graded_alternants(const PermutationWeightSet& pws, const EvaluationPoint& u,
                                               int max_depth) {
  std::vector<Rational> out(static_cast<std::size_t>(max_depth) + 1, Rational(0));
  for (const auto& pw : pws) {
    if (pw.depth > max_depth) break;
    out[static_cast<std::size_t>(pw.depth)] += pw.sign * alternant(pw.mu_plus, u);
  }
  return out;
}

inline GradedPointCharacter character_at_point(const AffineDominant& dom, const EvaluationPoint& u, int max_depth,
                                               EnumerationMethod method = EnumerationMethod::translation) {
  if (!u.has_distinct_entries()) throw LatticeError("evaluation point entries must be pairwise distinct");
  if (!(u.rank() == dom.rank())) throw LatticeError("evaluation point rank does not match the weight");
  const auto num_set = permutation_weights(dom, max_depth, method);
  const auto den_set = permutation_weights(AffineDominant::trivial(dom.rank()), max_depth, method);
  return {graded_alternants(num_set, u, max_depth), graded_alternants(den_set, u, max_depth)};
}

/// a = [ (lambda^+, lambda^+ + 2 rho) - k~ r (r+2) / 12 ] / (2 k~).
inline Rational anomaly(const AffineDominant& dom) {
  const Rank rank = dom.rank();
  const HorizontalWeight lambda = dom.horizontal();
  const Coord r = rank.value();
  const Coord k_tilde = dom.level() + r + 1;
  const Rational casimir = inner_product(lambda, lambda + Coord{2} * weyl_vector(rank));
  const Rational central = Rational(k_tilde * r * (r + 2), 12);
  return (casimir - central) / Rational(2 * k_tilde);
}

}  // namespace affchar
