#pragma once

// Test-only reference computations. None of these call into the library's
// enumeration, determinant or dimension code, so they can check it.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer sum-zero vectors of length n with sum of squares 2*half, by full
/// cube enumeration.
inline std::vector<std::vector<Int>> shell_brute_force(int n, Int half) {
  std::vector<std::vector<Int>> out;
  Int bound = 0;
  while ((bound + 1) * (bound + 1) <= 2 * half) ++bound;
  std::vector<Int> c(static_cast<std::size_t>(n), -bound);
  while (true) {
    Int sum = 0, sq = 0;
    for (Int x : c) sum += x, sq += x * x;
    if (sum == 0 && sq == 2 * half) out.push_back(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

/// p(n) for n = 0..N by the standard coin DP.
inline std::vector<BigInt> partition_counts(int N) {
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= N; ++part)
    for (int n = part; n <= N; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  return p;
}

/// prod (1-q^n) from Euler's pentagonal theorem.
inline std::vector<BigInt> pentagonal_phi(int N) {
  std::vector<BigInt> out(static_cast<std::size_t>(N) + 1, 0);
  for (Int k = -N; k <= N; ++k) {
    const Int e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= N) out[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return out;
}

/// Semistandard Young tableaux of shape `parts` with entries 1..n; calls
/// fn(content) with content[i] = number of entries equal to i+1.
inline void for_each_ssyt(const std::vector<Int>& parts, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> t;
  for (Int p : parts)
    if (p > 0) t.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      fn(content);
      return;
    }
    const auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= n; ++v) {
      t[i][j] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      rec(idx + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
}

/// Number of SSYT: the dimension of the GL(n) irrep with highest weight `parts`.
inline BigInt ssyt_count(const std::vector<Int>& parts, int n) {
  BigInt count = 0;
  for_each_ssyt(parts, n, [&](const std::vector<int>&) { ++count; });
  return count;
}

inline Rational rpow(const Rational& x, Int e) {
  Rational out = 1;
  for (Int i = 0; i < e; ++i) out *= x;
  return out;
}

/// Schur polynomial as a sum of tableau monomials.
inline Rational schur_by_tableaux(const std::vector<Int>& parts, const std::vector<Rational>& u) {
  Rational total = 0;
  for_each_ssyt(parts, static_cast<int>(u.size()), [&](const std::vector<int>& content) {
    Rational m = 1;
    for (std::size_t i = 0; i < u.size(); ++i) m *= rpow(u[i], content[i]);
    total += m;
  });
  return total;
}

/// Complete homogeneous polynomial h_q(u) by enumerating monomials.
inline Rational homogeneous_brute_force(int q, const std::vector<Rational>& u) {
  std::function<Rational(std::size_t, int)> rec = [&](std::size_t i, int left) -> Rational {
    if (i + 1 == u.size()) return rpow(u[i], left);
    Rational acc = 0;
    for (int e = 0; e <= left; ++e) acc += rpow(u[i], e) * rec(i + 1, left - e);
    return acc;
  };
  return q < 0 ? Rational(0) : rec(0, q);
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

/// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const std::vector<std::vector<Rational>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    Rational term = permutation_sign(perm);
    for (std::size_t i = 0; i < m.size(); ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// One dominant orbit element: Dynkin labels of mu^+ - rho, depth, sign.
using OrbitRecord = std::tuple<Int, std::vector<Int>, int>;
using OrbitState = std::pair<Int, std::vector<Int>>;  // depth, horizontal coordinates

/// Orbit of the level-k weight with horizontal coordinates `top` under the
/// affine Weyl group generated by simple reflections s_0..s_r, explored by
/// breadth-first search and cut at depth max_depth. Depth never decreases
/// along a reduced word, so pruning at max_depth loses nothing. Returns each
/// state with the length of the path that first reached it.
inline std::map<OrbitState, int> affine_orbit_bfs_states(const std::vector<Int>& top, Int level, Int max_depth) {
  const std::size_t n = top.size();
  std::map<OrbitState, int> dist;
  std::deque<OrbitState> queue;
  dist[{0, top}] = 0;
  queue.push_back({0, top});
  while (!queue.empty()) {
    const OrbitState s = queue.front();
    queue.pop_front();
    const int d = dist[s];
    auto visit = [&](OrbitState next) {
      if (next.first > max_depth) return;
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
      OrbitState next = s;
      std::swap(next.second[i], next.second[i + 1]);
      visit(std::move(next));
    }
    // s_0: reflection in alpha_0 = mu_{r+1} - mu_1 + delta
    const Int m = level - (s.second[0] - s.second[n - 1]);
    OrbitState next = s;
    next.second[0] += m;
    next.second[n - 1] -= m;
    next.first += m;
    visit(std::move(next));
  }
  return dist;
}

/// Dominant elements of a regular orbit (strictly decreasing top with
/// top[0] - top[r] < level). The action is then free, so the parity of any
/// path length is the signature.
inline std::set<OrbitRecord> affine_orbit_bfs(const std::vector<Int>& top, Int level, Int max_depth) {
  std::set<OrbitRecord> out;
  for (const auto& [state, d] : affine_orbit_bfs_states(top, level, max_depth)) {
    const auto& c = state.second;
    if (!std::is_sorted(c.begin(), c.end(), std::greater<>{})) continue;
    std::vector<Int> labels(c.size() - 1);
    // labels of mu - rho
    for (std::size_t i = 0; i + 1 < c.size(); ++i) labels[i] = c[i] - c[i + 1] - 1;
    out.emplace(state.first, labels, d % 2 == 0 ? 1 : -1);
  }
  return out;
}

/// Dominant elements of any orbit as (depth, coordinates with minimum 0).
inline std::set<OrbitState> affine_orbit_dominant(const std::vector<Int>& top, Int level, Int max_depth) {
  std::set<OrbitState> out;
  for (const auto& [state, d] : affine_orbit_bfs_states(top, level, max_depth)) {
    auto c = state.second;
    if (!std::is_sorted(c.begin(), c.end(), std::greater<>{})) continue;
    const Int lo = c.back();
    for (auto& x : c) x -= lo;
    out.emplace(state.first, c);
  }
  return out;
}

/// Top of the shifted orbit for Dynkin labels at rank r: coordinates of rho + lambda.
inline std::vector<Int> shifted_top(const std::vector<Int>& labels) {
  const std::size_t n = labels.size() + 1;
  std::vector<Int> c(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) c[i] = c[i + 1] + labels[i] + 1;
  return c;
}

}  // namespace oracle
