#pragma once

// Brute-force reference computations used as test oracles. They work from
// raw coordinates and tables and share no code path with the library
// beyond the data types.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "proxima/instance.hpp"

namespace proxima::reference {

inline double dist(const Metric& m, const Point& p, const Point& q) {
  if (m.kind() == MetricKind::explicit_matrix) return m.table()[p.index()][q.index()];
  long double s = 0.0L;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    const long double d = static_cast<long double>(p.coords()[i]) - q.coords()[i];
    s += d * d;
  }
  return static_cast<double>(std::sqrt(s));
}

inline double pair_distance(const SetPair& sp) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : sp.a()) {
    for (const auto& y : sp.b()) best = std::min(best, dist(sp.metric(), x, y));
  }
  return best;
}

/// First (i, j, k) with d(i, j) > d(i, k) + d(k, j), scanning all ordered
/// triples of distinct elements.
inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> triangle_violation(
    const DistanceTable& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (t[i][j] > t[i][k] + t[k][j]) return std::tuple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

/// Positions in A within `eps` of d(A, B) from B[j].
inline std::vector<std::size_t> partners_of(const SetPair& sp, std::size_t j, double eps) {
  const double d = reference::pair_distance(sp);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sp.a().size(); ++i) {
    if (dist(sp.metric(), sp.a()[i], sp.b()[j]) <= d + eps) out.push_back(i);
  }
  return out;
}

/// Maximum ratio d(S x1, S x2) / d(x1, x2) over distinct pairs of the
/// domain of `s_table` (npos entries skipped).
inline double max_ratio(const SetPair& sp, const std::vector<std::size_t>& s_table) {
  double best = 0.0;
  for (std::size_t i = 0; i < s_table.size(); ++i) {
    for (std::size_t j = 0; j < s_table.size(); ++j) {
      if (i == j || s_table[i] == static_cast<std::size_t>(-1) ||
          s_table[j] == static_cast<std::size_t>(-1)) {
        continue;
      }
      const double num = dist(sp.metric(), sp.a()[s_table[i]], sp.a()[s_table[j]]);
      const double den = dist(sp.metric(), sp.a()[i], sp.a()[j]);
      best = std::max(best, num / den);
    }
  }
  return best;
}

/// Iterates the partner rule from `start` until a repeat; returns the
/// visited positions including the repeated one.
inline std::vector<std::size_t> orbit(const Instance& inst, std::size_t start, double eps) {
  std::vector<std::size_t> seq{start};
  std::vector<bool> seen(inst.pair.a().size(), false);
  seen[start] = true;
  std::size_t x = start;
  while (true) {
    const auto p = partners_of(inst.pair, inst.map(x), eps);
    if (p.size() != 1) return seq;
    seq.push_back(p.front());
    if (seen[p.front()]) return seq;
    seen[p.front()] = true;
    x = p.front();
  }
}

}  // namespace proxima::reference
