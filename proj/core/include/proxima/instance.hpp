#pragma once

#include <optional>

#include "proxima/contraction.hpp"
#include "proxima/pair_geometry.hpp"

namespace proxima {

struct Tolerances {
  double eps_prox = 0.0;
  double tol = 1e-9;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// A complete problem: metric and sets, the map T, the tolerances, and an
/// optional user-declared contraction constant (cross-checked, never
/// trusted on its own).
struct Instance {
  SetPair pair;
  ProximityMap map;
  Tolerances tolerances;
  std::optional<double> declared_alpha;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace proxima
