#pragma once

// Permutation weights of A_r^(1): the dominant representatives, graded by
// depth, of the affine Weyl orbit of rho~ + Lambda^+. Two enumerators are
// provided. The translation enumerator walks the orbit directly as
// sort(lambda~ + k~ alpha) over root-lattice vectors alpha. The lemma
// enumerator builds candidates as sums of level-1 orbit weights and keeps
// those that pass the norm and residue tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affchar/numeric.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

class CongruenceError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// k Lambda_0 + lambda^+. Level k = 0 is accepted and gives the trivial weight 0^+.
class AffineDominant {
 public:
  AffineDominant(Coord level, DynkinLabels lambda_plus) : level_(level), lambda_(std::move(lambda_plus)) {
    if (level_ < 0) throw LatticeError("level must be non-negative");
    if (!lambda_.is_dominant()) throw LatticeError("horizontal part must have non-negative Dynkin labels");
    if (lambda_.sum() > level_) {
      throw LatticeError("label sum " + std::to_string(lambda_.sum()) + " exceeds level " +
                         std::to_string(level_));
    }
  }

  /// Lambda_0.
  static AffineDominant basic(Rank rank) {
    return AffineDominant(1, DynkinLabels(rank, std::vector<Coord>(static_cast<std::size_t>(rank.value()), 0)));
  }
  /// 0^+, whose shifted orbit is that of rho~ (the denominator).
  static AffineDominant trivial(Rank rank) {
    return AffineDominant(0, DynkinLabels(rank, std::vector<Coord>(static_cast<std::size_t>(rank.value()), 0)));
  }

  Rank rank() const { return lambda_.rank(); }
  Coord level() const { return level_; }
  const DynkinLabels& labels() const { return lambda_; }
  HorizontalWeight horizontal() const { return lambda_.to_weight(); }

  /// e.g. "A4(1)".
  std::string algebra_name() const { return "A" + std::to_string(rank().value()) + "(1)"; }

  friend bool operator==(const AffineDominant&, const AffineDominant&) = default;

 private:
  Coord level_;
  DynkinLabels lambda_;
};

/// Orbit data of rho~ + Lambda^+: level k~ = k + r + 1, lambda~ = rho + lambda^+.
struct ShiftedOrbitSpec {
  Coord k_tilde;
  HorizontalWeight lambda_tilde;  // canonical
  Coord sum_ref;                  // coordinate sum of lambda_tilde

  Rank rank() const { return lambda_tilde.rank(); }
};

inline ShiftedOrbitSpec make_shifted_spec(const AffineDominant& dom) {
  const Rank rank = dom.rank();
  HorizontalWeight lt = (weyl_vector(rank) + dom.horizontal()).canonical();
  const Coord sum = lt.coord_sum();
  ShiftedOrbitSpec spec{dom.level() + rank.value() + 1, std::move(lt), sum};
  // regular at level k~: guaranteed by label sum <= k
  if (spec.lambda_tilde[0] - spec.lambda_tilde[rank.width() - 1] >= spec.k_tilde) {
    throw std::logic_error("shifted weight is not regular at its level");
  }
  return spec;
}

/// epsilon(s): 0 on a repeated entry, otherwise the parity of the permutation
/// sorting s into strictly decreasing order.
inline int signature_index(std::span<const Coord> s) {
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return 0;
      if (s[i] < s[j]) sign = -sign;
    }
  }
  return sign;
}

/// Representative of mu with the same coordinate sum as spec.lambda_tilde.
inline HorizontalWeight aligned(const HorizontalWeight& mu, const ShiftedOrbitSpec& spec) {
  mu.check_same_rank(spec.lambda_tilde);
  const auto width = static_cast<Coord>(mu.rank().width());
  const Coord diff = spec.sum_ref - mu.coord_sum();
  if (diff % width != 0) {
    throw CongruenceError("weight is not in the root-lattice class of the orbit");
  }
  return mu.shifted(diff / width);
}

namespace detail {
inline Coord floor_mod(Coord a, Coord m) {
  const Coord r = a % m;
  return r < 0 ? r + m : r;
}

inline std::vector<Coord> residues(const HorizontalWeight& w, Coord modulus) {
  std::vector<Coord> s(w.coords().begin(), w.coords().end());
  for (auto& x : s) x = floor_mod(x, modulus);
  return s;
}
}  // namespace detail

/// Residue-multiset membership test on the sum-aligned representative.
inline bool is_permutation_weight(const HorizontalWeight& mu, const ShiftedOrbitSpec& spec) {
  auto got = detail::residues(aligned(mu, spec), spec.k_tilde);
  auto want = detail::residues(spec.lambda_tilde, spec.k_tilde);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

/// Signature from residues of the aligned coordinates modulo k~.
inline int signature(const HorizontalWeight& mu, const ShiftedOrbitSpec& spec) {
  const auto s = detail::residues(aligned(mu, spec), spec.k_tilde);
  return signature_index(s);
}

/// Integer M >= 0 with (mu,mu) - (lambda~,lambda~) = 2 k~ M, provided mu lies
/// in the orbit; nullopt otherwise.
inline std::optional<Coord> depth_of(const HorizontalWeight& mu, const ShiftedOrbitSpec& spec) {
  if (!mu.is_dominant()) throw LatticeError("depth_of requires a dominant weight");
  mu.check_same_rank(spec.lambda_tilde);
  const auto width = static_cast<Coord>(mu.rank().width());
  const Coord diff = scaled_inner_product(mu, mu) - scaled_inner_product(spec.lambda_tilde, spec.lambda_tilde);
  const Coord step = 2 * spec.k_tilde * width;
  if (diff < 0 || diff % step != 0) return std::nullopt;
  if ((spec.sum_ref - mu.coord_sum()) % width != 0) return std::nullopt;
  if (!is_permutation_weight(mu, spec)) return std::nullopt;
  return diff / step;
}

struct PermutationWeight {
  HorizontalWeight mu_plus;    // canonical, strictly dominant
  Coord depth;
  int sign;                    // +1 or -1
  DynkinLabels lambda_labels;  // labels of mu_plus - rho

  friend bool operator==(const PermutationWeight& a, const PermutationWeight& b) {
    return a.depth == b.depth && a.sign == b.sign && a.lambda_labels == b.lambda_labels;
  }
};

/// Paper-style list entry "(n1,...,nr)_M".
inline std::string list_notation(const PermutationWeight& pw) {
  std::string out = "(";
  const auto labels = pw.lambda_labels.values();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + ")_" + std::to_string(pw.depth);
}

/// Depth ascending, then labels lexicographically descending.
inline bool canonical_order(const PermutationWeight& a, const PermutationWeight& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  const auto la = a.lambda_labels.values();
  const auto lb = b.lambda_labels.values();
  return std::lexicographical_compare(lb.begin(), lb.end(), la.begin(), la.end());
}

inline PermutationWeight make_permutation_weight(const HorizontalWeight& mu, Coord depth, int sign) {
  HorizontalWeight c = mu.canonical();
  DynkinLabels labels = (c - weyl_vector(c.rank())).labels();
  return PermutationWeight{std::move(c), depth, sign, std::move(labels)};
}

class PermutationWeightSet {
 public:
  PermutationWeightSet(ShiftedOrbitSpec spec, Coord max_depth, std::vector<PermutationWeight> members)
      : spec_(std::move(spec)), max_depth_(max_depth), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), canonical_order);
    members_.erase(std::unique(members_.begin(), members_.end(),
                               [](const PermutationWeight& a, const PermutationWeight& b) {
                                 return a.depth == b.depth && a.lambda_labels == b.lambda_labels;
                               }),
                   members_.end());
  }

  const ShiftedOrbitSpec& spec() const { return spec_; }
  Coord max_depth() const { return max_depth_; }
  std::span<const PermutationWeight> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<PermutationWeight> at_depth(Coord m) const {
    std::vector<PermutationWeight> out;
    for (const auto& pw : members_)
      if (pw.depth == m) out.push_back(pw);
    return out;
  }

  PermutationWeightSet truncated(Coord m) const {
    std::vector<PermutationWeight> out;
    for (const auto& pw : members_)
      if (pw.depth <= m) out.push_back(pw);
    return PermutationWeightSet(spec_, std::min(m, max_depth_), std::move(out));
  }

  friend bool operator==(const PermutationWeightSet& a, const PermutationWeightSet& b) {
    return a.max_depth_ == b.max_depth_ && a.members_ == b.members_;
  }

 private:
  ShiftedOrbitSpec spec_;
  Coord max_depth_;
  std::vector<PermutationWeight> members_;
};

/// Largest shell index n for which some alpha in Gamma_n can reach depth
/// <= max_depth. Depth on Gamma_n is at least k~ n - sqrt(2 n (lambda~,lambda~)),
/// which is convex in n; the first n where that bound exceeds max_depth on its
/// increasing branch ends the search.
inline Coord last_reachable_shell(const ShiftedOrbitSpec& spec, Coord max_depth) {
  const auto width = static_cast<Coord>(spec.rank().width());
  const Coord scaled_norm = scaled_inner_product(spec.lambda_tilde, spec.lambda_tilde);  // (r+1) L
  const Coord k = spec.k_tilde;
  for (Coord n = 0;; ++n) {
    const bool increasing = 2 * k * k * n * width > scaled_norm;
    const Coord gap = k * n - max_depth;
    if (increasing && gap > 0 && gap * gap * width > 2 * n * scaled_norm) return n - 1;
  }
}

/// Depth of the translate t_alpha(lambda~): (lambda~, alpha) + k~ (alpha,alpha)/2.
inline Coord translation_depth(const ShiftedOrbitSpec& spec, std::span<const Coord> alpha, Coord half_norm) {
  Coord dot = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) dot += spec.lambda_tilde[i] * alpha[i];
  return dot + spec.k_tilde * half_norm;
}

/// Sorted (descending) lambda~ + k~ alpha with the parity of the sort.
struct SortedTranslate {
  HorizontalWeight mu_plus;
  int sign;
};

inline SortedTranslate sorted_translate(const ShiftedOrbitSpec& spec, std::span<const Coord> alpha) {
  std::vector<Coord> v(spec.rank().width());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = spec.lambda_tilde[i] + spec.k_tilde * alpha[i];
  const int sign = signature_index(v);
  std::sort(v.begin(), v.end(), std::greater<>{});
  return {HorizontalWeight(spec.rank(), std::move(v)), sign};
}

inline PermutationWeightSet enumerate_translations(const ShiftedOrbitSpec& spec, Coord max_depth) {
  if (max_depth < 0) throw LatticeError("maximum depth must be non-negative");
  std::vector<PermutationWeight> members;
  for_each_root_vector(spec.rank(), last_reachable_shell(spec, max_depth),
                       [&](std::span<const Coord> alpha, Coord half_norm) {
                         const Coord depth = translation_depth(spec, alpha, half_norm);
                         if (depth > max_depth) return;
                         auto t = sorted_translate(spec, alpha);
                         members.push_back(make_permutation_weight(t.mu_plus, depth, t.sign));
                       });
  return PermutationWeightSet(spec, max_depth, std::move(members));
}

/// Level-1 orbit of Lambda_nu: dominant weights with their depths, unsigned.
struct FundamentalOrbit {
  struct Entry {
    HorizontalWeight mu_plus;  // canonical
    Coord depth;
  };
  int nu;
  Coord max_depth;
  std::vector<Entry> members;  // by depth, then lexicographically descending coordinates
};

namespace detail {
// Weakly decreasing canonical coordinate sequences (last entry 0) with first entry <= top.
template <typename Fn>
void for_each_dominant(Rank rank, Coord top, Fn&& fn) {
  std::vector<Coord> c(rank.width(), 0);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t pos, Coord hi) {
    if (pos + 1 == c.size()) {
      c[pos] = 0;
      fn(HorizontalWeight(rank, c));
      return;
    }
    for (Coord v = hi; v >= 0; --v) {
      c[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, top);
}
}  // namespace detail

/// All dominant mu in the class of lambda_nu with (mu,mu) - (lambda_nu,lambda_nu) = 2M, M <= max_depth.
inline FundamentalOrbit enumerate_fundamental(int nu, Rank rank, Coord max_depth) {
  if (max_depth < 0) throw LatticeError("maximum depth must be non-negative");
  const HorizontalWeight base = fundamental_weight(rank, nu);
  const auto width = static_cast<Coord>(rank.width());
  const Coord base_norm = scaled_inner_product(base, base);
  const Coord norm_cap = base_norm + 2 * max_depth * width;  // scaled
  // (mu,mu) >= c_1^2 / 2 for canonical dominant mu
  const Coord top = isqrt(2 * norm_cap / width) + 1;

  FundamentalOrbit orbit{nu, max_depth, {}};
  detail::for_each_dominant(rank, top, [&](const HorizontalWeight& mu) {
    if (detail::floor_mod(mu.coord_sum() - nu, width) != 0) return;
    const Coord diff = scaled_inner_product(mu, mu) - base_norm;
    if (diff < 0 || diff % (2 * width) != 0) return;
    const Coord depth = diff / (2 * width);
    if (depth <= max_depth) orbit.members.push_back({mu, depth});
  });
  std::stable_sort(orbit.members.begin(), orbit.members.end(),
                   [](const auto& a, const auto& b) { return a.depth < b.depth; });
  return orbit;
}

/// Multiplicities m_nu with rho~ + Lambda^+ = sum_nu m_nu Lambda_nu.
inline std::vector<Coord> fundamental_multiplicities(const AffineDominant& dom) {
  const int r = dom.rank().value();
  std::vector<Coord> m(static_cast<std::size_t>(r) + 1);
  Coord horizontal = 0;
  for (int i = 1; i <= r; ++i) {
    m[static_cast<std::size_t>(i)] = dom.labels()[static_cast<std::size_t>(i - 1)] + 1;
    horizontal += m[static_cast<std::size_t>(i)];
  }
  m[0] = dom.level() + r + 1 - horizontal;
  return m;
}

inline PermutationWeightSet compose_lemma(const AffineDominant& dom, Coord max_depth) {
  if (max_depth < 0) throw LatticeError("maximum depth must be non-negative");
  const Rank rank = dom.rank();
  const ShiftedOrbitSpec spec = make_shifted_spec(dom);
  const auto mult = fundamental_multiplicities(dom);

  std::vector<int> slots;  // one entry per Lambda_nu summand, grouped by nu
  std::map<int, FundamentalOrbit> orbits;
  for (std::size_t nu = 0; nu < mult.size(); ++nu) {
    if (mult[nu] == 0) continue;
    slots.insert(slots.end(), static_cast<std::size_t>(mult[nu]), static_cast<int>(nu));
    orbits.emplace(static_cast<int>(nu), enumerate_fundamental(static_cast<int>(nu), rank, max_depth));
  }

  std::vector<PermutationWeight> members;
  std::vector<Coord> acc(rank.width(), 0);
  // Slots with equal nu are interchangeable, so their choices are taken in
  // non-decreasing index order.
  std::function<void(std::size_t, Coord, std::size_t)> rec = [&](std::size_t slot, Coord depth, std::size_t first) {
    if (slot == slots.size()) {
      const HorizontalWeight mu(rank, acc);
      const auto d = depth_of(mu, spec);
      if (d && *d == depth) members.push_back(make_permutation_weight(mu, depth, signature(mu, spec)));
      return;
    }
    const auto& entries = orbits.at(slots[slot]).members;
    const std::size_t start = (slot > 0 && slots[slot - 1] == slots[slot]) ? first : 0;
    for (std::size_t j = start; j < entries.size(); ++j) {
      const auto& e = entries[j];
      if (depth + e.depth > max_depth) break;  // entries sorted by depth
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += e.mu_plus[i];
      rec(slot + 1, depth + e.depth, j);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= e.mu_plus[i];
    }
  };
  rec(0, 0, 0);
  return PermutationWeightSet(spec, max_depth, std::move(members));
}

enum class EnumerationMethod { lemma, translation };

inline PermutationWeightSet permutation_weights(const AffineDominant& dom, Coord max_depth,
                                                EnumerationMethod method) {
  return method == EnumerationMethod::lemma ? compose_lemma(dom, max_depth)
                                            : enumerate_translations(make_shifted_spec(dom), max_depth);
}

}  // namespace affchar
