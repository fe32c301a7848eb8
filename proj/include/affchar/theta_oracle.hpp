#pragma once

// Kac-Peterson route: the alternating sum over the affine Weyl group is
// regrouped by root-lattice shells Gamma_n. Shell n contributes T_n, the sum
// over alpha in Gamma_n of sign(w) dim(w(lambda~ + k~ alpha) - rho) q^depth,
// where w sorts lambda~ + k~ alpha.

#include <algorithm>
#include <limits>
#include <vector>

#include "affchar/affine_orbits.hpp"
#include "affchar/character.hpp"
#include "affchar/qseries.hpp"
#include "affchar/symmetric_functions.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

struct TPolynomial {
  Coord shell;
  IntSeries series;
};

inline TPolynomial t_polynomial(const AffineDominant& dom, Coord shell, int trunc) {
  if (shell < 0) throw LatticeError("shell index must be non-negative");
  const ShiftedOrbitSpec spec = make_shifted_spec(dom);
  const Rank rank = dom.rank();
  const HorizontalWeight rho = weyl_vector(rank);
  TPolynomial t{shell, IntSeries(trunc)};
  for (const auto& alpha : root_shell(rank, shell).members) {
    const Coord depth = translation_depth(spec, alpha.coords(), shell);
    if (depth > trunc) continue;
    const auto sorted = sorted_translate(spec, alpha.coords());
    if (sorted.sign == 0) continue;
    const DynkinLabels labels = (sorted.mu_plus - rho).labels();
    t.series.add_term(static_cast<int>(depth), sorted.sign * weyl_dimension(labels));
  }
  return t;
}

/// T_0 + T_1 + ... + T_nmax, where T_0 = dim(lambda).
inline IntSeries shell_sum(const AffineDominant& dom, Coord max_shell, int trunc) {
  IntSeries out(trunc);
  for (Coord n = 0; n <= max_shell; ++n) out = out + t_polynomial(dom, n, trunc).series;
  return out;
}

namespace detail {
// Smallest depth over all alpha with half norm > max_shell for one orbit,
// searching only depths below `cap`.
inline Coord min_depth_beyond(const ShiftedOrbitSpec& spec, Coord max_shell, Coord cap) {
  Coord best = cap;
  for_each_root_vector(spec.rank(), last_reachable_shell(spec, cap), [&](std::span<const Coord> alpha, Coord half) {
    if (half <= max_shell) return;
    best = std::min(best, translation_depth(spec, alpha, half));
  });
  return best;
}

inline Coord min_depth_on_shell(const ShiftedOrbitSpec& spec, Coord shell) {
  Coord best = std::numeric_limits<Coord>::max();
  for (const auto& alpha : root_shell(spec.rank(), shell).members)
    best = std::min(best, translation_depth(spec, alpha.coords(), shell));
  return best;
}
}  // namespace detail

/// Highest order through which shells 0..max_shell fix both numerator and
/// denominator: one less than the smallest depth reached by any later shell.
inline int guaranteed_order(const AffineDominant& dom, Coord max_shell) {
  if (max_shell < 0) throw LatticeError("shell cutoff must be non-negative");
  const ShiftedOrbitSpec num = make_shifted_spec(dom);
  const ShiftedOrbitSpec den = make_shifted_spec(AffineDominant::trivial(dom.rank()));
  // the first non-empty later shell bounds the answer (A2 has no half norm 2)
  Coord next = max_shell + 1;
  while (root_shell(dom.rank(), next).members.empty()) ++next;
  Coord cap = std::min(detail::min_depth_on_shell(num, next), detail::min_depth_on_shell(den, next));
  cap = std::min(cap, detail::min_depth_beyond(num, max_shell, cap));
  cap = std::min(cap, detail::min_depth_beyond(den, max_shell, cap));
  return static_cast<int>(cap - 1);
}

/// sum T_{n,Lambda^+} / sum T_{n,0^+} over shells <= max_shell,
/// truncated at min(trunc, guaranteed_order).
inline IntSeries oracle_character(const AffineDominant& dom, Coord max_shell, int trunc) {
  const int order = std::min(trunc, guaranteed_order(dom, max_shell));
  const IntSeries num = shell_sum(dom, max_shell, order);
  const IntSeries den = shell_sum(AffineDominant::trivial(dom.rank()), max_shell, order);
  return num / den;
}

}  // namespace affchar
