#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace proxima {

using Coords = std::vector<double>;

/// An element of the ambient space: either a coordinate vector (euclidean
/// spaces) or the index of an element of an abstract finite space.
class Point {
 public:
  Point() = default;
  explicit Point(Coords coords);
  explicit Point(std::size_t index) : value_(index) {}

  bool is_coords() const { return std::holds_alternative<Coords>(value_); }
  bool is_index() const { return std::holds_alternative<std::size_t>(value_); }

  // Precondition: the matching alternative is held.
  const Coords& coords() const { return std::get<Coords>(value_); }
  std::size_t index() const { return std::get<std::size_t>(value_); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::variant<Coords, std::size_t> value_{std::size_t{0}};
};

std::string to_string(const Point& p);

enum class MetricKind { euclidean, explicit_matrix };

using DistanceTable = std::vector<std::vector<double>>;

/// The distance function of the ambient space.
///
/// A euclidean metric fixes the coordinate dimension. An explicit-matrix
/// metric is a square table of finite nonnegative reals; construction only
/// checks shape and finiteness, the metric axioms are checked by
/// validate_metric().
class Metric {
 public:
  static Metric euclidean(std::size_t dimension);
  static Metric explicit_matrix(DistanceTable table);

  MetricKind kind() const { return kind_; }
  /// Coordinate dimension (euclidean) or number of elements (matrix).
  std::size_t dimension() const { return dimension_; }
  const DistanceTable& table() const { return table_; }

  /// Throws DimensionMismatch or IndexOutOfRange when p is not an element
  /// of this space, InvalidInstance for non-finite coordinates.
  void check_point(const Point& p) const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  Metric(MetricKind kind, std::size_t dimension, DistanceTable table)
      : kind_(kind), dimension_(dimension), table_(std::move(table)) {}

  MetricKind kind_;
  std::size_t dimension_;
  DistanceTable table_;
};

std::string to_string(MetricKind kind);

double distance(const Metric& m, const Point& p, const Point& q);

/// Absolute slack used when comparing floating-point distances during
/// metric validation.
inline constexpr double kMetricSlack = 1e-9;

/// Explicit tables up to this many elements are validated exhaustively.
inline constexpr std::size_t kExhaustiveValidationLimit = 200;

inline constexpr std::uint64_t kDefaultValidationSeed = 0x5eed'0f'ba4ac5ULL;

enum class Axiom { nonnegativity, identity, symmetry, triangle };

std::string to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  /// Pair (p, q) for symmetry and identity, triple (p, r, via q) for the
  /// triangle inequality d(p, r) > d(p, q) + d(q, r).
  std::vector<Point> witness;
  std::string detail;
};

struct MetricReport {
  bool exhaustive = false;
  std::size_t triples_checked = 0;
  /// At most one entry per axiom: the first witness found.
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  bool holds(Axiom axiom) const { return violation(axiom) == nullptr; }
  const AxiomViolation* violation(Axiom axiom) const;
};

/// Checks nonnegativity, identity, symmetry and the triangle inequality.
///
/// Explicit tables with at most kExhaustiveValidationLimit elements are
/// scanned over every ordered triple. Larger tables and euclidean spaces are
/// checked on `sample_budget` triples drawn from a generator seeded with
/// `seed`, so reports are reproducible. Euclidean samples are drawn from the
/// box [-1e3, 1e3]^n.
MetricReport validate_metric(const Metric& m, std::size_t sample_budget,
                             std::uint64_t seed = kDefaultValidationSeed);

}  // namespace proxima
