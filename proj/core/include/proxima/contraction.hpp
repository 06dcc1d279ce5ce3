#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxima/errors.hpp"
#include "proxima/pair_geometry.hpp"

namespace proxima {

/// The non-self map T : A -> B as an index table: entry i is the position
/// in B of the image of A[i].
class ProximityMap {
 public:
  /// Throws InvalidInstance unless the table has one entry per point of A
  /// and every entry indexes into B.
  ProximityMap(std::vector<std::size_t> image, std::size_t a_size, std::size_t b_size);

  std::size_t operator()(std::size_t a_index) const { return image_.at(a_index); }
  std::span<const std::size_t> table() const { return image_; }
  std::size_t size() const { return image_.size(); }

  friend bool operator==(const ProximityMap&, const ProximityMap&) = default;

 private:
  std::vector<std::size_t> image_;
};

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// The self-map S : A0 -> A0 sending x to the unique proximal partner of
/// T(x). Indices are positions in A.
struct InducedMap {
  /// a0, sorted.
  std::vector<std::size_t> domain;
  /// Indexed by position in A; npos outside the domain.
  std::vector<std::size_t> table;

  bool contains(std::size_t a_index) const {
    return a_index < table.size() && table[a_index] != npos;
  }
  /// Throws IndexOutOfRange outside the domain.
  std::size_t operator()(std::size_t a_index) const;
};

enum class StopReason { converged, max_iterations, cycle_detected };

std::string to_string(StopReason reason);

/// The iterates x0, x1, ..., xN (positions in A) with per-step diagnostics.
struct IterationTrace {
  std::vector<std::size_t> points;
  /// d(x_k, x_{k+1}); one fewer entry than points.
  std::vector<double> step_gaps;
  /// d(x_k, T(x_k)) - d(A, B) per point. Nonnegative because d(A, B) is the
  /// minimum over A x B.
  std::vector<double> residuals;
  /// alpha^k / (1 - alpha) * d(x0, x1) per point; empty unless the run was
  /// driven by a contraction constant alpha < 1.
  std::vector<double> a_priori_bounds;
  StopReason stop_reason = StopReason::max_iterations;
};

/// T maps some point of A0 outside B0: its image has no proximal partner.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::size_t a_index, std::size_t b_index,
                      std::optional<IterationTrace> partial = std::nullopt);

  std::string_view hypothesis() const { return "T(A0) ⊆ B0"; }
  /// The offending x in A0 and its image T(x) in B.
  std::size_t a_index() const { return a_index_; }
  std::size_t b_index() const { return b_index_; }
  const std::optional<IterationTrace>& partial_trace() const { return partial_; }

 private:
  std::size_t a_index_;
  std::size_t b_index_;
  std::optional<IterationTrace> partial_;
};

/// T(x) has two distinct proximal partners y1 != y2. A proximal contraction
/// forces d(y1, y2) <= alpha * d(x, x) = 0, so T is not one.
class NonUniquePartner : public Error {
 public:
  NonUniquePartner(std::size_t a_index, std::size_t b_index, std::size_t first,
                   std::size_t second, std::optional<IterationTrace> partial = std::nullopt);

  std::size_t a_index() const { return a_index_; }
  std::size_t b_index() const { return b_index_; }
  std::pair<std::size_t, std::size_t> partners() const { return {first_, second_}; }
  const std::optional<IterationTrace>& partial_trace() const { return partial_; }

 private:
  std::size_t a_index_;
  std::size_t b_index_;
  std::size_t first_;
  std::size_t second_;
  std::optional<IterationTrace> partial_;
};

class MaxIterationsExceeded : public Error {
 public:
  explicit MaxIterationsExceeded(IterationTrace partial);
  const IterationTrace& partial_trace() const { return partial_; }

 private:
  IterationTrace partial_;
};

class StartNotInA0 : public Error {
 public:
  explicit StartNotInA0(std::size_t start);
  std::size_t start() const { return start_; }

 private:
  std::size_t start_;
};

/// Builds S from the pairing relation of `geom`.
///
/// Throws HypothesisViolation when T(x) is outside b0 for some x in a0 and
/// NonUniquePartner when T(x) has more than one proximal partner in A.
/// Either way the first offending x in index order is reported.
InducedMap build_induced_map(const PairGeometry& geom, const ProximityMap& map);

enum class ContractionVerdict { contraction, not_contraction };

std::string to_string(ContractionVerdict verdict);

struct ContractionCertificate {
  /// Maximum of d(u1, u2) / d(x1, x2) over the examined pairs.
  double alpha_hat = 0.0;
  /// Positions in A of the lexicographically smallest pair attaining
  /// alpha_hat, and of the images u1, u2 used for it. Absent when no pair
  /// was examined.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<std::pair<std::size_t, std::size_t>> witness_images;
  std::size_t pair_count = 0;
  ContractionVerdict verdict = ContractionVerdict::contraction;

  bool is_contraction() const { return verdict == ContractionVerdict::contraction; }
};

/// Exhaustive scan of every unordered pair of distinct points of the
/// domain of S. A single-point domain certifies alpha_hat = 0.
ContractionCertificate certify_contraction(const SetPair& sp, const InducedMap& s);

/// Wider scan over all of A: for every pair x1 != x2 of A and every choice
/// of proximal partners u1 of T(x1), u2 of T(x2), the ratio
/// d(u1, u2) / d(x1, x2). Pairs whose images have no partner are vacuous.
/// Unlike certify_contraction this does not need S to exist.
ContractionCertificate certify_proximal_contraction(const SetPair& sp, const PairGeometry& geom,
                                                    const ProximityMap& map);

struct IterationOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10'000;
  /// Contraction constant driving the stopping rule and the a-priori
  /// bounds. Runs with no constant, or one >= 1, are unguaranteed and stop
  /// when an iterate repeats.
  std::optional<double> alpha;
};

struct BestProximityResult {
  /// Position in A of the final iterate.
  std::size_t point = 0;
  /// d(z, T(z)) - d(A, B).
  double residual = 0.0;
  /// Number of map evaluations.
  std::size_t iterations = 0;
  /// True when the run was driven by a certified alpha < 1.
  bool guaranteed = false;
  IterationTrace trace;
};

/// Picard iteration x_{k+1} = S(x_k) from A[start].
///
/// Stops with `converged` when an exact fixed point is reached, or when
/// d(x_k, x_{k+1}) <= tol * (1 - alpha) / max(alpha, tol) for alpha < 1 so
/// that the a-posteriori estimate puts x_{k+1} within tol of the limit.
/// Without a usable alpha, stops with `cycle_detected` on the first
/// repeated iterate. Throws StartNotInA0, or MaxIterationsExceeded after
/// max_iter evaluations. When `options.alpha` is empty it is certified with
/// certify_contraction first.
BestProximityResult banach_iterate(const SetPair& sp, const PairGeometry& geom,
                                   const ProximityMap& map, const InducedMap& s,
                                   std::size_t start, IterationOptions options = {});

/// The same iteration without S: each step scans A afresh for the unique
/// x_{k+1} with d(x_{k+1}, T(x_k)) <= d(A, B) + eps_prox. Throws
/// HypothesisViolation or NonUniquePartner at the offending step, carrying
/// the trace so far. `options.alpha` is used as given.
BestProximityResult direct_iterate(const SetPair& sp, const PairGeometry& geom,
                                   const ProximityMap& map, std::size_t start,
                                   IterationOptions options = {});

struct VerificationReport {
  double residual = 0.0;
  bool residual_within_tol = false;
  bool lower_bound_holds = false;
  /// Present when an induced map was supplied.
  std::optional<bool> fixed_under_s;

  bool passed() const {
    return residual_within_tol && lower_bound_holds && fixed_under_s.value_or(true);
  }
};

/// Re-evaluates d(z, T(z)) for the result point: the excess over d(A, B)
/// must be at most tol (inclusive) and never negative, and S(z) = z when
/// `s` is given.
VerificationReport verify_result(const BestProximityResult& result, const SetPair& sp,
                                 const PairGeometry& geom, const ProximityMap& map, double tol,
                                 const InducedMap* s = nullptr);

}  // namespace proxima
