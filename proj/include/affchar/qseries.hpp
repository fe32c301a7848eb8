#pragma once

// Truncated power series in q with exact coefficients. A series of
// truncation N carries the coefficients of q^0..q^N; every binary operation
// works to the smaller truncation of its operands.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "affchar/numeric.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename C>
class QSeries {
 public:
  using coefficient_type = C;

  /// Zero series of truncation N.
  explicit QSeries(int trunc) : coeffs_(check_trunc(trunc) + 1, C(0)) {}

  QSeries(int trunc, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    check_trunc(trunc);
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1, C(0));
  }

  QSeries(int trunc, std::initializer_list<C> coeffs) : QSeries(trunc, std::vector<C>(coeffs)) {}

  static QSeries one(int trunc) {
    QSeries s(trunc);
    s.coeffs_[0] = 1;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  C& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  /// Adds c q^n when n is within the truncation; drops it otherwise.
  void add_term(int n, const C& c) {
    if (n >= 0 && n <= trunc()) coeffs_[static_cast<std::size_t>(n)] += c;
  }

  QSeries truncated(int n) const {
    if (n > trunc()) throw SeriesError("cannot extend a truncated series");
    return QSeries(n, std::vector<C>(coeffs_.begin(), coeffs_.begin() + n + 1));
  }

  QSeries operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= out.trunc(); ++n) out[n] = a[n] + b[n];
    return out;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.trunc(), b.trunc()));
    for (int i = 0; i <= out.trunc(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= out.trunc(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  friend QSeries operator/(const QSeries& a, const QSeries& b) { return divide(a, b); }

  /// a / b; b[0] must be a unit of the coefficient ring.
  friend QSeries divide(const QSeries& a, const QSeries& b) {
    const C inv = unit_inverse(b[0]);
    QSeries out(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= out.trunc(); ++n) {
      C acc = a[n];
      for (int i = 1; i <= n; ++i) acc -= b[i] * out[n - i];
      out[n] = acc * inv;
    }
    return out;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// Coefficients of q^0..q^n coincide.
  friend std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    os << '[';
    for (int n = 0; n <= s.trunc(); ++n) os << (n ? "," : "") << to_string(s[n]);
    return os << "] + O(q^" << s.trunc() + 1 << ')';
  }

  friend bool agree_through(const QSeries& a, const QSeries& b, int n) {
    if (n > a.trunc() || n > b.trunc()) return false;
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
  }

  /// Lowest order where a and b differ within the common truncation, or -1.
  friend int first_difference(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.trunc(), b.trunc());
    for (int i = 0; i <= n; ++i)
      if (a[i] != b[i]) return i;
    return -1;
  }

 private:
  static std::size_t check_trunc(int trunc) {
    if (trunc < 0) throw SeriesError("truncation order must be non-negative");
    return static_cast<std::size_t>(trunc);
  }

  static C unit_inverse(const C& c) {
    if constexpr (std::is_same_v<C, BigInt>) {
      if (c != 1 && c != -1) throw SeriesError("division by a series whose constant term is not +-1");
      return c;
    } else {
      if (c == 0) throw SeriesError("division by a series with zero constant term");
      return C(1) / c;
    }
  }

  std::vector<C> coeffs_;
};

using IntSeries = QSeries<BigInt>;
using RationalSeries = QSeries<Rational>;

template <typename C>
QSeries<C> pow(const QSeries<C>& s, unsigned e) {
  QSeries<C> out = QSeries<C>::one(s.trunc());
  for (unsigned i = 0; i < e; ++i) out = out * s;
  return out;
}

/// prod_{n>=1} (1 - q^n) through q^N.
inline IntSeries euler_phi(int trunc) {
  IntSeries phi = IntSeries::one(trunc);
  for (int n = 1; n <= trunc; ++n) {
    // multiply by (1 - q^n) in place, high orders first
    for (int m = trunc; m >= n; --m) phi[m] -= phi[m - n];
  }
  return phi;
}

/// Theta series of the A_r root lattice: sum_n |Gamma_n| q^n.
inline IntSeries lattice_theta(Rank rank, int trunc) {
  return IntSeries(trunc, shell_sizes(rank, trunc));
}

/// Theta(A_r) / Phi^r.
inline IntSeries basic_character_rhs(Rank rank, int trunc) {
  return lattice_theta(rank, trunc) / pow(euler_phi(trunc), static_cast<unsigned>(rank.value()));
}

}  // namespace affchar
