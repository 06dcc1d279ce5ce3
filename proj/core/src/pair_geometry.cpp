#include "proxima/pair_geometry.hpp"

#include <algorithm>
#include <limits>

#include "proxima/errors.hpp"

namespace proxima {

namespace {

void check_list(const Metric& m, const std::vector<Point>& pts, const char* name) {
  if (pts.empty()) throw InvalidInstance(std::string("set ") + name + " is empty");
  for (const auto& p : pts) m.check_point(p);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        throw InvalidInstance(std::string("duplicate point ") + to_string(pts[i]) + " in " +
                              name + " at positions " + std::to_string(i) + " and " +
                              std::to_string(j));
      }
    }
  }
}

}  // namespace

SetPair::SetPair(Metric metric, std::vector<Point> a, std::vector<Point> b)
    : metric_(std::move(metric)), a_(std::move(a)), b_(std::move(b)) {
  check_list(metric_, a_, "A");
  check_list(metric_, b_, "B");
}

double default_eps_prox(const Metric& m) {
  return m.kind() == MetricKind::euclidean ? 1e-9 : 0.0;
}

double pair_distance(const SetPair& sp) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sp.a().size(); ++i) {
    for (std::size_t j = 0; j < sp.b().size(); ++j) best = std::min(best, sp.cross(i, j));
  }
  return best;
}

double point_to_set_distance(const Metric& m, const Point& x, std::span<const Point> set) {
  if (set.empty()) throw InvalidInstance("point-to-set distance to an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : set) best = std::min(best, distance(m, x, s));
  return best;
}

PairGeometry proximal_subsets(const SetPair& sp, double eps_prox) {
  if (!(eps_prox >= 0.0)) throw InvalidInstance("eps_prox must be nonnegative");
  const std::size_t na = sp.a().size();
  const std::size_t nb = sp.b().size();

  // One pass for the table, reused for both the minimum and the relation.
  std::vector<double> table(na * nb);
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      table[i * nb + j] = sp.cross(i, j);
      dmin = std::min(dmin, table[i * nb + j]);
    }
  }

  PairGeometry g;
  g.pair_distance = dmin;
  g.epsilon_prox = eps_prox;
  g.partners_in_b.resize(na);
  g.partners_in_a.resize(nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      if (g.proximal(table[i * nb + j])) {
        g.partners_in_b[i].push_back(j);
        g.partners_in_a[j].push_back(i);
      }
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    if (g.in_a0(i)) g.a0.push_back(i);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    if (g.in_b0(j)) g.b0.push_back(j);
  }
  return g;
}

CompactnessVerdict check_approximative_compactness(const SetPair&) {
  return CompactnessVerdict::holds_trivially;
}

std::string_view justification(CompactnessVerdict) {
  return "B is finite: every sequence in B repeats some point infinitely often, "
         "so it has a constant, hence convergent, subsequence";
}

}  // namespace proxima
