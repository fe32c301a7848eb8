#pragma once

// Schur functions of A_r evaluated at exact rational points u_I = e^{mu_I}:
// complete homogeneous table via Newton's identity, Jacobi-Trudi
// determinants, alternants det[u_i^{c_j}] and Weyl dimensions.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affchar/numeric.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

class EvaluationPoint {
 public:
  EvaluationPoint(Rank rank, std::vector<Rational> u) : rank_(rank), u_(std::move(u)) {
    if (u_.size() != rank_.width()) {
      throw LatticeError("evaluation point needs " + std::to_string(rank_.width()) + " entries");
    }
    for (const auto& x : u_) {
      if (x == 0) throw LatticeError("evaluation point entries must be nonzero");
    }
  }

  /// u = (1, ..., 1), where Schur values become dimensions.
  static EvaluationPoint unit(Rank rank) {
    return EvaluationPoint(rank, std::vector<Rational>(rank.width(), Rational(1)));
  }

  Rank rank() const { return rank_; }
  std::span<const Rational> values() const { return u_; }
  const Rational& operator[](std::size_t i) const { return u_[i]; }

  bool has_distinct_entries() const {
    for (std::size_t i = 0; i < u_.size(); ++i)
      for (std::size_t j = i + 1; j < u_.size(); ++j)
        if (u_[i] == u_[j]) return false;
    return true;
  }

 private:
  Rank rank_;
  std::vector<Rational> u_;
};

/// Integer power with negative exponents allowed.
inline Rational rational_pow(const Rational& base, Coord exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  for (Coord e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

/// p_i = sum_I u_I^i.
inline Rational power_sum(const EvaluationPoint& u, Coord i) {
  Rational p(0);
  for (const auto& x : u.values()) p += rational_pow(x, i);
  return p;
}

/// Complete homogeneous symmetric polynomials S_0..S_N at a point.
class HomogeneousTable {
 public:
  explicit HomogeneousTable(std::vector<Rational> values) : values_(std::move(values)) {}

  Coord order() const { return static_cast<Coord>(values_.size()) - 1; }
  std::span<const Rational> values() const { return values_; }

  /// S_q, zero for q < 0.
  Rational operator()(Coord q) const {
    if (q < 0) return Rational(0);
    if (q > order()) throw std::out_of_range("homogeneous table queried beyond its order");
    return values_[static_cast<std::size_t>(q)];
  }

 private:
  std::vector<Rational> values_;
};

// Newton: q S_q = sum_{i=1}^{q} p_i S_{q-i}.
inline HomogeneousTable homogeneous_table(const EvaluationPoint& u, Coord order) {
  if (order < 0) order = 0;
  std::vector<Rational> p(static_cast<std::size_t>(order) + 1);
  for (Coord i = 1; i <= order; ++i) p[static_cast<std::size_t>(i)] = power_sum(u, i);
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (Coord q = 1; q <= order; ++q) {
    Rational acc(0);
    for (Coord i = 1; i <= q; ++i) acc += p[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(q - i)];
    s[static_cast<std::size_t>(q)] = acc / q;
  }
  return HomogeneousTable(std::move(s));
}

/// Jacobi-Trudi determinant det[S_{q_i - i + j}] for any integer sequence.
/// Non-partition sequences straighten to a signed Schur value or zero.
inline Rational schur_value(std::span<const Coord> parts, const HomogeneousTable& table) {
  const std::size_t s = parts.size();
  SquareMatrix<Rational> m(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      m(i, j) = table(parts[i] - static_cast<Coord>(i) + static_cast<Coord>(j));
  return determinant(std::move(m));
}

inline Rational schur_value(std::span<const Coord> parts, const EvaluationPoint& u) {
  if (parts.size() > u.rank().width()) throw LatticeError("more parts than variables");
  Coord top = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    top = std::max(top, parts[i] - static_cast<Coord>(i) + static_cast<Coord>(parts.size()) - 1);
  return schur_value(parts, homogeneous_table(u, top));
}

/// det[u_i^{c_j}] on the canonical coordinates of w. Zero when two
/// coordinates coincide.
inline Rational alternant(const HorizontalWeight& w, const EvaluationPoint& u) {
  w.check_same_rank(HorizontalWeight::zero(u.rank()));
  const HorizontalWeight c = w.canonical();
  const std::size_t n = u.rank().width();
  SquareMatrix<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rational_pow(u[i], c[j]);
  return determinant(std::move(m));
}

inline bool is_regular(const HorizontalWeight& w) {
  std::vector<Coord> c(w.coords().begin(), w.coords().end());
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

namespace detail {
inline void require_dominant_labels(const DynkinLabels& labels) {
  if (!labels.is_dominant()) throw LatticeError("Weyl dimension needs non-negative Dynkin labels");
}
}  // namespace detail

/// Weyl product formula: prod_{i<j} (l_i - l_j)/(j - i) with l = lambda + rho.
inline BigInt weyl_dimension(const DynkinLabels& labels) {
  detail::require_dominant_labels(labels);
  const HorizontalWeight shifted = labels.to_weight() + weyl_vector(labels.rank());
  const std::size_t n = labels.rank().width();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= shifted[i] - shifted[j];
      den *= static_cast<Coord>(j - i);
    }
  }
  return num / den;
}

/// Same dimension from the Jacobi-Trudi determinant at u = (1,...,1), where
/// S_q = C(q + r, r).
inline BigInt weyl_dimension_jacobi_trudi(const DynkinLabels& labels) {
  detail::require_dominant_labels(labels);
  const HorizontalWeight w = labels.to_weight();
  const auto r = static_cast<Coord>(labels.rank().value());
  const std::size_t s = labels.rank().width();
  SquareMatrix<BigInt> m(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Coord q = w[i] - static_cast<Coord>(i) + static_cast<Coord>(j);
      m(i, j) = q < 0 ? BigInt(0) : binomial(q + r, r);
    }
  return determinant(std::move(m));
}

}  // namespace affchar
