#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proxima/instance.hpp"

namespace proxima {

/// Exhaustive minimisation of x -> d(x, T(x)) over all of A.
struct OracleResult {
  /// Positions in A attaining min_value exactly, ascending.
  std::vector<std::size_t> argmin;
  double min_value = 0.0;
  double pair_distance = 0.0;
  /// min_value <= pair_distance + eps_prox.
  bool best_proximity_exists = false;
};

OracleResult brute_force_solve(const SetPair& sp, const ProximityMap& map, double eps_prox);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  MetricKind space_kind = MetricKind::euclidean;
  /// Requested |A|, including the fixed point. May come out smaller when
  /// every ray reaches the magnitude cap.
  std::size_t a_size = 16;
  /// Requested number of slab points in B. At least the image of T is
  /// always present, at most one slab point per point of A.
  std::size_t b_size = 16;
  double alpha_target = 0.5;
  double slab_gap = 1.0;
  std::size_t decoy_count = 0;
  /// Dimension of the slab cross-section; the ambient space has one more.
  std::size_t dimension = 2;
};

struct GeneratedInstance {
  Instance instance;
  /// Position in A of the unique best proximity point.
  std::size_t fixed_point = 0;
};

/// Largest coordinate magnitude used by the generator.
inline constexpr double kGeneratorMagnitudeCap = 100.0;

/// Builds a random instance satisfying every hypothesis of the best
/// proximity theorem, with a known answer.
///
/// A = {0} x P and the slab of B is {slab_gap} x P' with P' between the
/// image of sigma and P, where P is a finite subset of R^dimension closed
/// under a map sigma with sigma(0) = 0 and
///   |sigma(p) - sigma(q)| <= alpha_target * |p - q|.
/// T(0, p) = (slab_gap, sigma(p)), so d(A, B) = slab_gap, every slab point
/// (slab_gap, q) has exactly one partner (0, q), the induced map is
/// S(0, p) = (0, sigma(p)) and (0, 0) is the unique best proximity point.
///
/// P grows along the rays +-e_i from the origin. Each new point s on a ray
/// picks a parent t = sigma(s) among the points already on that ray and is
/// placed just beyond
///   max( t / alpha, max_{s'} s' + |t - sigma(s')| / alpha ),
/// which keeps sigma alpha-Lipschitz on the ray and |sigma(x)| <= alpha|x|,
/// the latter covering pairs on different rays because distinct rays meet
/// at right or straight angles. Decoys are added to B at distance at least
/// 2 * (slab_gap + diameter), so they never enter B0.
///
/// The explicit-matrix family tabulates the same points: A occupies the
/// first |A| elements, B the rest. Identical configs give identical
/// instances.
GeneratedInstance generate_instance(const GeneratorConfig& cfg);

}  // namespace proxima
