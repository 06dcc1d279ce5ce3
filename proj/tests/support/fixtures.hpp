#pragma once

// Hand-built instances shared by the unit, CLI and acceptance suites. The
// same instances are serialised under tests/fixtures/ for the CLI.

#include <string>
#include <vector>

#include "proxima/instance.hpp"

namespace proxima::testing {

inline Point xy(double x, double y) { return Point(Coords{x, y}); }

inline Instance make_instance(Metric m, std::vector<Point> a, std::vector<Point> b,
                              std::vector<std::size_t> t) {
  const double eps = default_eps_prox(m);
  SetPair sp(std::move(m), std::move(a), std::move(b));
  const std::size_t na = sp.a().size();
  const std::size_t nb = sp.b().size();
  return Instance{std::move(sp), ProximityMap(std::move(t), na, nb), Tolerances{eps, 1e-9},
                  std::nullopt};
}

/// A = {(0, t)}, B = {(1, t)}, t in {0, 1/4, 1}; T(0,1) = (1,1/4),
/// T(0,1/4) = (1,0), T(0,0) = (1,0). S: (0,1) -> (0,1/4) -> (0,0).
inline Instance geometric() {
  return make_instance(Metric::euclidean(2), {xy(0, 0), xy(0, 0.25), xy(0, 1)},
                       {xy(1, 0), xy(1, 0.25), xy(1, 1)}, {0, 0, 1});
}

/// A = {(0, t)}, B = {(1, t)}, t in {0, 1/2, 1}; T(0,1) = (1,1/2),
/// T(0,1/2) = T(0,0) = (1,0). The pair ((0,1/2), (0,1)) has ratio exactly 1.
inline Instance dyadic_boundary() {
  return make_instance(Metric::euclidean(2), {xy(0, 0), xy(0, 0.5), xy(0, 1)},
                       {xy(1, 0), xy(1, 0.5), xy(1, 1)}, {0, 0, 1});
}

/// T(0, t) = (1, t/2) with B holding the images. (1, 1/4) has no partner
/// at distance 1 since (0, 1/4) is not in A, so T(A0) escapes B0 at (0, 1/2).
inline Instance escapes_b0() {
  return make_instance(Metric::euclidean(2), {xy(0, 0), xy(0, 0.5), xy(0, 1)},
                       {xy(1, 0), xy(1, 0.5), xy(1, 1), xy(1, 0.25)}, {0, 3, 1});
}

/// Three elements at mutual distance 1; A = {0, 1}, B = {2}: both points of
/// A are proximal partners of T(x) = 2.
inline Instance non_unique_partner() {
  return make_instance(Metric::explicit_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                       {Point(std::size_t{0}), Point(std::size_t{1})}, {Point(std::size_t{2})},
                       {0, 0});
}

/// A = {0, 1}, B = {2, 3}; partners 0-2 and 1-3; T swaps, so S(0) = 1 and
/// S(1) = 0.
inline Instance swap_cycle() {
  return make_instance(
      Metric::explicit_matrix({{0, 1, 1, 2}, {1, 0, 2, 1}, {1, 2, 0, 1}, {2, 1, 1, 0}}),
      {Point(std::size_t{0}), Point(std::size_t{1})},
      {Point(std::size_t{2}), Point(std::size_t{3})}, {1, 0});
}

/// T maps outside B0 and no point of A attains d(A, B).
inline Instance no_best_proximity() {
  return make_instance(Metric::euclidean(2), {xy(0, 0), xy(0, 1)},
                       {xy(1, 0), xy(1, 1), xy(1, 0.5)}, {2, 0});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(PROXIMA_FIXTURE_DIR) + "/" + name;
}

}  // namespace proxima::testing
