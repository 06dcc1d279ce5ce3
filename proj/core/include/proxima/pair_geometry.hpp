#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "proxima/metric.hpp"

namespace proxima {

/// Two finite nonempty point lists over one metric.
///
/// Construction checks that every point belongs to the metric's space and
/// rejects duplicates within A or within B (they would make the proximal
/// partner of a point ambiguous).
class SetPair {
 public:
  SetPair(Metric metric, std::vector<Point> a, std::vector<Point> b);

  const Metric& metric() const { return metric_; }
  const std::vector<Point>& a() const { return a_; }
  const std::vector<Point>& b() const { return b_; }

  double distance(const Point& p, const Point& q) const { return proxima::distance(metric_, p, q); }
  /// d(A[i], B[j]).
  double cross(std::size_t i, std::size_t j) const { return distance(a_[i], b_[j]); }

  friend bool operator==(const SetPair&, const SetPair&) = default;

 private:
  Metric metric_;
  std::vector<Point> a_;
  std::vector<Point> b_;
};

/// Proximity tolerance used when none is given: rounding in square roots
/// makes exact comparison fragile for coordinates, matrix entries are exact.
double default_eps_prox(const Metric& m);

/// d(A, B), the minimum over the finite product A x B.
double pair_distance(const SetPair& sp);

double point_to_set_distance(const Metric& m, const Point& x, std::span<const Point> set);

/// The proximal subsets A0, B0 and the pairing relation between them.
///
/// A point of A belongs to a0 when some point of B lies within
/// pair_distance + epsilon_prox of it, and symmetrically for b0. All indices
/// refer to positions in the SetPair's lists and are kept sorted.
struct PairGeometry {
  double pair_distance = 0.0;
  double epsilon_prox = 0.0;
  std::vector<std::size_t> a0;
  std::vector<std::size_t> b0;
  /// For each position in A, its proximal partners in B (empty if not in a0).
  std::vector<std::vector<std::size_t>> partners_in_b;
  /// For each position in B, its proximal partners in A (empty if not in b0).
  std::vector<std::vector<std::size_t>> partners_in_a;

  bool in_a0(std::size_t i) const { return !partners_in_b[i].empty(); }
  bool in_b0(std::size_t j) const { return !partners_in_a[j].empty(); }
  /// True when d(A[i], B[j]) lies within the proximal tolerance.
  bool proximal(double d) const { return d <= pair_distance + epsilon_prox; }
};

PairGeometry proximal_subsets(const SetPair& sp, double eps_prox);

enum class CompactnessVerdict { holds_trivially };

/// B is approximatively compact with respect to A whenever B is finite:
/// a sequence in a finite set takes some value infinitely often, so it has a
/// constant subsequence.
CompactnessVerdict check_approximative_compactness(const SetPair& sp);

std::string_view justification(CompactnessVerdict verdict);

}  // namespace proxima
