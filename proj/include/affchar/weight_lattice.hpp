#pragma once

// Weight and root lattice of A_r written in the basis of the r+1 weights
// mu_1..mu_{r+1} of the defining representation. A weight is a sequence of
// r+1 integers taken modulo the all-ones vector (sum of the mu_I is zero).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "affchar/numeric.hpp"

namespace affchar {

using Coord = std::int64_t;

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultMaxRank = 8;

/// Rank r of A_r.
class Rank {
 public:
  explicit Rank(int r, int max_rank = kDefaultMaxRank) : r_(r) {
    if (r < 1 || r > max_rank) {
      throw LatticeError("rank must lie in [1, " + std::to_string(max_rank) +
                         "], got " + std::to_string(r));
    }
  }

  int value() const { return r_; }
  /// Number of mu-coordinates, r + 1.
  std::size_t width() const { return static_cast<std::size_t>(r_) + 1; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int r_;
};

class DynkinLabels;

struct PartitionView {
  std::vector<Coord> parts;  // q_1 >= ... >= q_s > 0
  Coord height = 0;
};

class HorizontalWeight {
 public:
  HorizontalWeight(Rank rank, std::vector<Coord> coords)
      : rank_(rank), coords_(std::move(coords)) {
    if (coords_.size() != rank_.width()) {
      throw LatticeError("expected " + std::to_string(rank_.width()) +
                         " coordinates, got " + std::to_string(coords_.size()));
    }
  }

  static HorizontalWeight zero(Rank rank) {
    return HorizontalWeight(rank, std::vector<Coord>(rank.width(), 0));
  }

  Rank rank() const { return rank_; }
  std::span<const Coord> coords() const { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord coord_sum() const { return std::accumulate(coords_.begin(), coords_.end(), Coord{0}); }

  /// Representative with minimum coordinate 0.
  HorizontalWeight canonical() const {
    const Coord lo = *std::min_element(coords_.begin(), coords_.end());
    return shifted(-lo);
  }

  /// Adds t to every coordinate; the weight itself is unchanged.
  HorizontalWeight shifted(Coord t) const {
    std::vector<Coord> c = coords_;
    for (auto& x : c) x += t;
    return HorizontalWeight(rank_, std::move(c));
  }

  bool is_dominant() const {
    return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>{});
  }

  bool is_strictly_dominant() const {
    return std::adjacent_find(coords_.begin(), coords_.end(), std::less_equal<>{}) == coords_.end();
  }

  DynkinLabels labels() const;

  /// Partition of a dominant weight; throws for non-dominant input.
  PartitionView partition() const {
    if (!is_dominant()) throw LatticeError("partition view requires a dominant weight");
    PartitionView view;
    for (Coord c : canonical().coords_) {
      if (c > 0) {
        view.parts.push_back(c);
        view.height += c;
      }
    }
    return view;
  }

  Coord height() const { return partition().height; }

  HorizontalWeight& operator+=(const HorizontalWeight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  HorizontalWeight& operator-=(const HorizontalWeight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend HorizontalWeight operator+(HorizontalWeight a, const HorizontalWeight& b) { return a += b; }
  friend HorizontalWeight operator-(HorizontalWeight a, const HorizontalWeight& b) { return a -= b; }
  friend HorizontalWeight operator*(Coord s, HorizontalWeight a) {
    for (auto& x : a.coords_) x *= s;
    return a;
  }

  /// Equality of weights, i.e. of canonical forms.
  friend bool operator==(const HorizontalWeight& a, const HorizontalWeight& b) {
    return a.rank_ == b.rank_ && a.canonical().coords_ == b.canonical().coords_;
  }

  void check_same_rank(const HorizontalWeight& o) const {
    if (!(rank_ == o.rank_)) {
      throw LatticeError("rank mismatch: A" + std::to_string(rank_.value()) + " vs A" +
                         std::to_string(o.rank_.value()));
    }
  }

 private:
  Rank rank_;
  std::vector<Coord> coords_;
};

/// Coefficients on the fundamental dominant weights lambda_1..lambda_r.
class DynkinLabels {
 public:
  DynkinLabels(Rank rank, std::vector<Coord> labels) : rank_(rank), labels_(std::move(labels)) {
    if (labels_.size() != static_cast<std::size_t>(rank_.value())) {
      throw LatticeError("expected " + std::to_string(rank_.value()) + " Dynkin labels, got " +
                         std::to_string(labels_.size()));
    }
  }

  Rank rank() const { return rank_; }
  std::span<const Coord> values() const { return labels_; }
  Coord operator[](std::size_t i) const { return labels_[i]; }
  Coord sum() const { return std::accumulate(labels_.begin(), labels_.end(), Coord{0}); }
  bool is_dominant() const {
    return std::all_of(labels_.begin(), labels_.end(), [](Coord a) { return a >= 0; });
  }

  DynkinLabels reversed() const {
    return DynkinLabels(rank_, std::vector<Coord>(labels_.rbegin(), labels_.rend()));
  }

  /// Canonical coordinates: c_{r+1} = 0 and c_i = c_{i+1} + a_i. Minimum is 0
  /// only for dominant labels; otherwise canonicalize the result.
  HorizontalWeight to_weight() const {
    std::vector<Coord> c(rank_.width(), 0);
    for (std::size_t i = labels_.size(); i-- > 0;) c[i] = c[i + 1] + labels_[i];
    return HorizontalWeight(rank_, std::move(c)).canonical();
  }

  friend bool operator==(const DynkinLabels&, const DynkinLabels&) = default;

 private:
  Rank rank_;
  std::vector<Coord> labels_;
};

inline DynkinLabels HorizontalWeight::labels() const {
  std::vector<Coord> a(coords_.size() - 1);
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) a[i] = coords_[i] - coords_[i + 1];
  return DynkinLabels(rank_, std::move(a));
}

/// (r+1) times the scalar product; always an integer.
inline Coord scaled_inner_product(const HorizontalWeight& a, const HorizontalWeight& b) {
  a.check_same_rank(b);
  const auto n = static_cast<Coord>(a.rank().width());
  Coord dot = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) dot += a[i] * b[i];
  return n * dot - a.coord_sum() * b.coord_sum();
}

/// (a, b) with the metric (mu_I, mu_J) = delta_IJ - 1/(r+1).
inline Rational inner_product(const HorizontalWeight& a, const HorizontalWeight& b) {
  return Rational(scaled_inner_product(a, b), static_cast<Coord>(a.rank().width()));
}

inline Rational norm(const HorizontalWeight& a) { return inner_product(a, a); }

/// rho = (r, r-1, ..., 1, 0).
inline HorizontalWeight weyl_vector(Rank rank) {
  std::vector<Coord> c(rank.width());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Coord>(c.size() - 1 - i);
  return HorizontalWeight(rank, std::move(c));
}

/// alpha_i = mu_i - mu_{i+1}, 1-based i.
inline HorizontalWeight simple_root(Rank rank, int i) {
  if (i < 1 || i > rank.value()) throw LatticeError("simple root index out of range");
  std::vector<Coord> c(rank.width(), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  c[static_cast<std::size_t>(i)] = -1;
  return HorizontalWeight(rank, std::move(c));
}

/// lambda_nu: nu leading ones; lambda_0 is the zero weight.
inline HorizontalWeight fundamental_weight(Rank rank, int nu) {
  if (nu < 0 || nu > rank.value()) throw LatticeError("fundamental weight index out of range");
  std::vector<Coord> c(rank.width(), 0);
  std::fill_n(c.begin(), nu, 1);
  return HorizontalWeight(rank, std::move(c));
}

inline Coord isqrt(Coord n) {
  if (n <= 0) return 0;
  auto x = static_cast<Coord>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// Calls fn(coords, half_norm) for every root-lattice vector (integer, sum
/// zero) with sum of squares <= 2 * max_half_norm, in lexicographic order.
template <typename Fn>
void for_each_root_vector(Rank rank, Coord max_half_norm, Fn&& fn) {
  if (max_half_norm < 0) return;
  const std::size_t width = rank.width();
  const Coord budget = 2 * max_half_norm;
  const Coord bound = isqrt(budget);
  std::vector<Coord> c(width, 0);

  // pos: next coordinate to fill; sum/sq: running totals over c[0..pos).
  std::function<void(std::size_t, Coord, Coord)> rec = [&](std::size_t pos, Coord sum, Coord sq) {
    const auto remaining = static_cast<Coord>(width - pos);
    if (remaining == 1) {
      c[pos] = -sum;
      const Coord total = sq + sum * sum;
      if (total <= budget) fn(std::span<const Coord>(c), total / 2);
      return;
    }
    for (Coord v = -bound; v <= bound; ++v) {
      const Coord s = sum + v;
      const Coord q = sq + v * v;
      // the last remaining-1 coordinates must cancel s; they cost at least s^2/(remaining-1)
      if (q > budget || s * s > (budget - q) * (remaining - 1)) continue;
      c[pos] = v;
      rec(pos + 1, s, q);
    }
  };
  rec(0, 0, 0);
}

/// Root-lattice vectors of squared length 2n.
struct RootShell {
  Coord n = 0;
  std::vector<HorizontalWeight> members;
};

inline RootShell root_shell(Rank rank, Coord n) {
  if (n < 0) throw LatticeError("shell index must be non-negative");
  RootShell shell{n, {}};
  for_each_root_vector(rank, n, [&](std::span<const Coord> c, Coord half) {
    if (half == n) shell.members.emplace_back(rank, std::vector<Coord>(c.begin(), c.end()));
  });
  return shell;
}

/// |Gamma_n| for n = 0..max_n.
inline std::vector<BigInt> shell_sizes(Rank rank, Coord max_n) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max<Coord>(max_n + 1, 0)), 0);
  for_each_root_vector(rank, max_n, [&](std::span<const Coord>, Coord half) {
    out[static_cast<std::size_t>(half)] += 1;
  });
  return out;
}

}  // namespace affchar
