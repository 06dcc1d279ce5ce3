#include "proxima/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "proxima/errors.hpp"

namespace proxima {

Point::Point(Coords coords) : value_(std::move(coords)) {}

std::string to_string(const Point& p) {
  if (p.is_index()) return "#" + std::to_string(p.index());
  std::ostringstream os;
  os.precision(17);
  os << '(';
  const auto& c = p.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(MetricKind kind) {
  return kind == MetricKind::euclidean ? "euclidean" : "explicit-matrix";
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::nonnegativity: return "nonnegativity";
    case Axiom::identity: return "identity";
    case Axiom::symmetry: return "symmetry";
    case Axiom::triangle: return "triangle";
  }
  return "unknown";
}

Metric Metric::euclidean(std::size_t dimension) {
  if (dimension == 0) throw InvalidInstance("euclidean metric needs dimension >= 1");
  return Metric(MetricKind::euclidean, dimension, {});
}

Metric Metric::explicit_matrix(DistanceTable table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInstance("distance matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InvalidInstance("distance matrix row " + std::to_string(i) + " has " +
                            std::to_string(table[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(table[i][j])) {
        throw InvalidInstance("distance matrix entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") is not finite");
      }
    }
  }
  return Metric(MetricKind::explicit_matrix, n, std::move(table));
}

void Metric::check_point(const Point& p) const {
  if (kind_ == MetricKind::euclidean) {
    if (!p.is_coords()) {
      throw DimensionMismatch("index point " + to_string(p) + " used with a euclidean metric");
    }
    if (p.coords().size() != dimension_) {
      throw DimensionMismatch("point has dimension " + std::to_string(p.coords().size()) +
                              ", metric has dimension " + std::to_string(dimension_));
    }
    for (double c : p.coords()) {
      if (!std::isfinite(c)) throw InvalidInstance("non-finite coordinate in " + to_string(p));
    }
    return;
  }
  if (!p.is_index()) {
    throw DimensionMismatch("coordinate point " + to_string(p) +
                            " used with an explicit-matrix metric");
  }
  if (p.index() >= dimension_) {
    throw IndexOutOfRange("index " + std::to_string(p.index()) + " outside space of " +
                          std::to_string(dimension_) + " elements");
  }
}

double distance(const Metric& m, const Point& p, const Point& q) {
  m.check_point(p);
  m.check_point(q);
  if (m.kind() == MetricKind::explicit_matrix) return m.table()[p.index()][q.index()];
  const auto& a = p.coords();
  const auto& b = q.coords();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

const AxiomViolation* MetricReport::violation(Axiom axiom) const {
  auto it = std::find_if(violations.begin(), violations.end(),
                         [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
  return it == violations.end() ? nullptr : &*it;
}

namespace {

// Accumulates the first violation per axiom.
class ViolationLog {
 public:
  explicit ViolationLog(MetricReport& report) : report_(report) {}

  bool seen(Axiom axiom) const { return !report_.holds(axiom); }

  void record(Axiom axiom, std::vector<Point> witness, std::string detail) {
    if (seen(axiom)) return;
    report_.violations.push_back({axiom, std::move(witness), std::move(detail)});
  }

 private:
  MetricReport& report_;
};

std::string fmt_d(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_triple(const Metric& m, const Point& p, const Point& q, const Point& r,
                  ViolationLog& log) {
  const double pr = distance(m, p, r);
  const double pq = distance(m, p, q);
  const double qr = distance(m, q, r);
  if (pr > pq + qr + kMetricSlack) {
    log.record(Axiom::triangle, {p, r, q},
               "d" + to_string(p) + to_string(r) + " = " + fmt_d(pr) + " > " + fmt_d(pq) +
                   " + " + fmt_d(qr) + " via " + to_string(q));
  }
}

void check_pair(const Metric& m, const Point& p, const Point& q, ViolationLog& log) {
  const double pq = distance(m, p, q);
  const double qp = distance(m, q, p);
  if (pq < 0.0 || qp < 0.0) {
    log.record(Axiom::nonnegativity, {p, q}, "negative distance between " + to_string(p) +
                                                 " and " + to_string(q));
  }
  if (pq != qp && std::abs(pq - qp) > (m.kind() == MetricKind::euclidean ? kMetricSlack : 0.0)) {
    log.record(Axiom::symmetry, {p, q},
               "d" + to_string(p) + to_string(q) + " = " + fmt_d(pq) + " but reverse is " +
                   fmt_d(qp));
  }
  const bool same = p == q;
  if (same && pq != 0.0) {
    log.record(Axiom::identity, {p, q}, "nonzero self-distance at " + to_string(p));
  } else if (!same && pq == 0.0 && m.kind() == MetricKind::explicit_matrix) {
    log.record(Axiom::identity, {p, q},
               "distinct elements " + to_string(p) + " and " + to_string(q) + " at distance 0");
  }
}

}  // namespace

MetricReport validate_metric(const Metric& m, std::size_t sample_budget, std::uint64_t seed) {
  MetricReport report;
  ViolationLog log(report);
  std::mt19937_64 rng(seed);
  const std::size_t budget = std::max<std::size_t>(sample_budget, 1);

  if (m.kind() == MetricKind::explicit_matrix) {
    const std::size_t n = m.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) check_pair(m, Point(i), Point(j), log);
    }
    if (n <= kExhaustiveValidationLimit) {
      report.exhaustive = true;
      for (std::size_t i = 0; i < n && !log.seen(Axiom::triangle); ++i) {
        for (std::size_t j = 0; j < n && !log.seen(Axiom::triangle); ++j) {
          if (j == i) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            ++report.triples_checked;
            check_triple(m, Point(i), Point(k), Point(j), log);
            if (log.seen(Axiom::triangle)) break;
          }
        }
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < budget && !log.seen(Axiom::triangle); ++s) {
        ++report.triples_checked;
        check_triple(m, Point(pick(rng)), Point(pick(rng)), Point(pick(rng)), log);
      }
    }
    return report;
  }

  std::uniform_real_distribution<double> coord(-1e3, 1e3);
  auto sample = [&] {
    Coords c(m.dimension());
    for (double& x : c) x = coord(rng);
    return Point(std::move(c));
  };
  for (std::size_t s = 0; s < budget; ++s) {
    const Point p = sample();
    const Point q = sample();
    const Point r = sample();
    check_pair(m, p, p, log);
    check_pair(m, p, q, log);
    ++report.triples_checked;
    check_triple(m, p, q, r, log);
  }
  return report;
}

}  // namespace proxima
