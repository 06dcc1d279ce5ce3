#include "proxima/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace proxima {

OracleResult brute_force_solve(const SetPair& sp, const ProximityMap& map, double eps_prox) {
  OracleResult r;
  r.pair_distance = pair_distance(sp);
  r.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sp.a().size(); ++i) {
    const double v = sp.cross(i, map(i));
    if (v < r.min_value) {
      r.min_value = v;
      r.argmin.assign(1, i);
    } else if (v == r.min_value) {
      r.argmin.push_back(i);
    }
  }
  r.best_proximity_exists = r.min_value <= r.pair_distance + eps_prox;
  return r;
}

namespace {

struct RayNode {
  double position;
  double parent;  // position of sigma(node) on the same ray
};

class Ray {
 public:
  bool open = true;

  Ray() : nodes_{{0.0, 0.0}} {}

  const std::vector<RayNode>& nodes() const { return nodes_; }

  // Places a node with parent `t`, or returns false when it would land
  // beyond the magnitude cap.
  bool grow(double t, double alpha, double extra) {
    double bound = 0.0;
    double s_max = 0.0;
    for (const auto& n : nodes_) {
      s_max = std::max(s_max, n.position);
      if (alpha > 0.0) bound = std::max(bound, n.position + std::abs(t - n.parent) / alpha);
    }
    if (alpha > 0.0) bound = std::max(bound, t / alpha);
    // Relative margin absorbs rounding in the ratio checks; the spacing keeps
    // distinct points well separated relative to any iteration tolerance.
    double s = std::max(bound + 1e-9 * (1.0 + bound), s_max + 1e-3) + extra;
    if (s > kGeneratorMagnitudeCap) return false;
    nodes_.push_back({s, t});
    return true;
  }

  // Parent of the outermost node: a sibling placed there only needs spacing.
  double sibling_parent() const {
    auto it = std::max_element(nodes_.begin(), nodes_.end(), [](const auto& l, const auto& r) {
      return l.position < r.position;
    });
    return it->parent;
  }

 private:
  std::vector<RayNode> nodes_;
};

Coords ray_point(std::size_t ray, std::size_t dimension, double position) {
  Coords c(dimension, 0.0);
  c[ray / 2] = (ray % 2 == 0 ? 1.0 : -1.0) * position;
  return c;
}

Coords slab_point(double first, const Coords& rest) {
  Coords c;
  c.reserve(rest.size() + 1);
  c.push_back(first);
  c.insert(c.end(), rest.begin(), rest.end());
  return c;
}

double euclid(const Coords& p, const Coords& q) {
  return distance(Metric::euclidean(p.size()), Point(p), Point(q));
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorConfig& cfg) {
  if (!(cfg.alpha_target >= 0.0 && cfg.alpha_target < 1.0)) {
    throw InvalidInstance("alpha_target must lie in [0, 1)");
  }
  if (!(cfg.slab_gap > 0.0)) throw InvalidInstance("slab_gap must be positive");
  if (cfg.a_size < 1 || cfg.b_size < 1) throw InvalidInstance("sizes must be >= 1");
  if (cfg.dimension < 1) throw InvalidInstance("dimension must be >= 1");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double alpha = cfg.alpha_target;

  // Grow P along the rays.
  std::vector<Ray> rays(2 * cfg.dimension);
  std::size_t grown = 0;
  const std::size_t wanted = cfg.a_size - 1;
  while (grown < wanted) {
    std::vector<std::size_t> open;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (rays[r].open) open.push_back(r);
    }
    if (open.empty()) break;
    Ray& ray = rays[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]];

    double t = 0.0;
    double extra = 0.0;
    if (alpha == 0.0) {
      extra = 0.1 + 0.9 * unit(rng);
    } else if (unit(rng) < 0.5) {
      t = ray.sibling_parent();
      extra = 0.1 + 0.9 * unit(rng);
    } else {
      const auto& nodes = ray.nodes();
      t = nodes[std::uniform_int_distribution<std::size_t>(0, nodes.size() - 1)(rng)].position;
      // Half of the deeper nodes sit exactly at the binding constraint.
      extra = unit(rng) < 0.5 ? 0.0 : 0.5 * unit(rng);
    }
    if (ray.grow(t, alpha, extra)) {
      ++grown;
    } else if (t == ray.sibling_parent() || alpha == 0.0) {
      ray.open = false;
    }
  }

  // Flatten: P[0] is the origin, sigma as indices into P.
  std::vector<Coords> p_coords{Coords(cfg.dimension, 0.0)};
  std::vector<std::size_t> sigma{0};
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const auto& nodes = rays[r].nodes();
    const std::size_t base = p_coords.size();
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      p_coords.push_back(ray_point(r, cfg.dimension, nodes[k].position));
    }
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      std::size_t parent = 0;
      for (std::size_t m = 1; m < nodes.size(); ++m) {
        if (nodes[m].position == nodes[k].parent) parent = base + m - 1;
      }
      sigma.push_back(parent);
    }
  }
  const std::size_t np = p_coords.size();

  // Slab of B: the image of sigma, topped up from P to the requested size.
  std::vector<bool> in_slab(np, false);
  std::size_t slab_size = 0;
  for (std::size_t k : sigma) {
    if (!in_slab[k]) {
      in_slab[k] = true;
      ++slab_size;
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < np; ++k) {
    if (!in_slab[k]) rest.push_back(k);
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (std::size_t k : rest) {
    if (slab_size >= cfg.b_size) break;
    in_slab[k] = true;
    ++slab_size;
  }

  // Orderings of A and B are shuffled so that positions carry no meaning.
  std::vector<std::size_t> a_order(np);
  std::iota(a_order.begin(), a_order.end(), 0);
  std::shuffle(a_order.begin(), a_order.end(), rng);

  std::vector<Coords> a_pts;
  std::vector<std::size_t> a_of_p(np);
  for (std::size_t pos = 0; pos < np; ++pos) {
    a_of_p[a_order[pos]] = pos;
    a_pts.push_back(slab_point(0.0, p_coords[a_order[pos]]));
  }

  double max_norm = 0.0;
  for (const auto& c : p_coords) max_norm = std::max(max_norm, euclid(c, Coords(c.size(), 0.0)));
  const double diameter = std::hypot(cfg.slab_gap, 2.0 * max_norm);

  struct BEntry {
    Coords coords;
    std::size_t p_index;  // npos for decoys
  };
  std::vector<BEntry> b_entries;
  for (std::size_t k = 0; k < np; ++k) {
    if (in_slab[k]) b_entries.push_back({slab_point(cfg.slab_gap, p_coords[k]), k});
  }
  const double decoy_offset = cfg.slab_gap + 2.0 * (cfg.slab_gap + diameter);
  for (std::size_t d = 0; d < cfg.decoy_count; ++d) {
    Coords c(cfg.dimension + 1, 0.0);
    c[0] = decoy_offset + static_cast<double>(d) + unit(rng);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = max_norm * (2.0 * unit(rng) - 1.0);
    b_entries.push_back({std::move(c), npos});
  }
  std::shuffle(b_entries.begin(), b_entries.end(), rng);

  std::vector<std::size_t> b_of_p(np, npos);
  for (std::size_t j = 0; j < b_entries.size(); ++j) {
    if (b_entries[j].p_index != npos) b_of_p[b_entries[j].p_index] = j;
  }
  std::vector<std::size_t> image(np);
  for (std::size_t k = 0; k < np; ++k) image[a_of_p[k]] = b_of_p[sigma[k]];

  std::vector<Point> a_points;
  std::vector<Point> b_points;
  Metric metric = Metric::euclidean(cfg.dimension + 1);
  if (cfg.space_kind == MetricKind::euclidean) {
    for (auto& c : a_pts) a_points.emplace_back(std::move(c));
    for (auto& e : b_entries) b_points.emplace_back(std::move(e.coords));
  } else {
    std::vector<Coords> all = a_pts;
    for (const auto& e : b_entries) all.push_back(e.coords);
    DistanceTable table(all.size(), std::vector<double>(all.size(), 0.0));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        table[i][j] = table[j][i] = euclid(all[i], all[j]);
      }
    }
    metric = Metric::explicit_matrix(std::move(table));
    for (std::size_t i = 0; i < a_pts.size(); ++i) a_points.emplace_back(i);
    for (std::size_t j = 0; j < b_entries.size(); ++j) b_points.emplace_back(a_pts.size() + j);
  }

  const double eps = default_eps_prox(metric);
  const std::size_t na = a_points.size();
  const std::size_t nb = b_points.size();
  GeneratedInstance out{
      Instance{SetPair(std::move(metric), std::move(a_points), std::move(b_points)),
               ProximityMap(std::move(image), na, nb), Tolerances{eps, 1e-9}, alpha},
      a_of_p[0]};
  return out;
}

}  // namespace proxima
