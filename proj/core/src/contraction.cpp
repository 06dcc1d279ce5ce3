#include "proxima/contraction.hpp"

#include <algorithm>
#include <cmath>

namespace proxima {

ProximityMap::ProximityMap(std::vector<std::size_t> image, std::size_t a_size,
                           std::size_t b_size)
    : image_(std::move(image)) {
  if (image_.size() != a_size) {
    throw InvalidInstance("map has " + std::to_string(image_.size()) + " entries but A has " +
                          std::to_string(a_size) + " points");
  }
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= b_size) {
      throw InvalidInstance("map entry " + std::to_string(i) + " = " +
                            std::to_string(image_[i]) + " is outside B (size " +
                            std::to_string(b_size) + ")");
    }
  }
}

std::size_t InducedMap::operator()(std::size_t a_index) const {
  if (!contains(a_index)) {
    throw IndexOutOfRange("point " + std::to_string(a_index) + " is not in A0");
  }
  return table[a_index];
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::converged: return "converged";
    case StopReason::max_iterations: return "max-iterations";
    case StopReason::cycle_detected: return "cycle-detected";
  }
  return "unknown";
}

std::string to_string(ContractionVerdict verdict) {
  return verdict == ContractionVerdict::contraction ? "contraction" : "not-contraction";
}

HypothesisViolation::HypothesisViolation(std::size_t a_index, std::size_t b_index,
                                         std::optional<IterationTrace> partial)
    : Error("T(A0) is not contained in B0: T(A[" + std::to_string(a_index) + "]) = B[" +
            std::to_string(b_index) + "] has no proximal partner in A"),
      a_index_(a_index),
      b_index_(b_index),
      partial_(std::move(partial)) {}

NonUniquePartner::NonUniquePartner(std::size_t a_index, std::size_t b_index, std::size_t first,
                                   std::size_t second, std::optional<IterationTrace> partial)
    : Error("T(A[" + std::to_string(a_index) + "]) = B[" + std::to_string(b_index) +
            "] has distinct proximal partners A[" + std::to_string(first) + "] and A[" +
            std::to_string(second) + "]"),
      a_index_(a_index),
      b_index_(b_index),
      first_(first),
      second_(second),
      partial_(std::move(partial)) {}

MaxIterationsExceeded::MaxIterationsExceeded(IterationTrace partial)
    : Error("iteration did not converge within " +
            std::to_string(partial.step_gaps.size()) + " steps"),
      partial_(std::move(partial)) {}

StartNotInA0::StartNotInA0(std::size_t start)
    : Error("start point A[" + std::to_string(start) + "] is not in A0"), start_(start) {}

InducedMap build_induced_map(const PairGeometry& geom, const ProximityMap& map) {
  if (map.size() != geom.partners_in_b.size()) {
    throw InvalidInstance("map and geometry disagree on the size of A");
  }
  InducedMap s;
  s.domain = geom.a0;
  s.table.assign(map.size(), npos);
  for (std::size_t x : geom.a0) {
    const std::size_t y = map(x);
    const auto& partners = geom.partners_in_a.at(y);
    if (partners.empty()) throw HypothesisViolation(x, y);
    if (partners.size() > 1) throw NonUniquePartner(x, y, partners[0], partners[1]);
    s.table[x] = partners.front();
  }
  return s;
}

namespace {

ContractionVerdict verdict_for(double alpha) {
  return alpha < 1.0 ? ContractionVerdict::contraction : ContractionVerdict::not_contraction;
}

// Strictly-greater updates over a lexicographic scan keep the smallest
// witness among ties.
struct MaxRatio {
  ContractionCertificate cert;

  void offer(double ratio, std::size_t x1, std::size_t x2, std::size_t u1, std::size_t u2) {
    ++cert.pair_count;
    if (!cert.witness || ratio > cert.alpha_hat) {
      cert.alpha_hat = ratio;
      cert.witness = {x1, x2};
      cert.witness_images = {u1, u2};
    }
  }

  ContractionCertificate finish() {
    cert.verdict = verdict_for(cert.alpha_hat);
    return cert;
  }
};

}  // namespace

ContractionCertificate certify_contraction(const SetPair& sp, const InducedMap& s) {
  MaxRatio acc;
  const auto& a = sp.a();
  const auto& dom = s.domain;
  for (std::size_t p = 0; p < dom.size(); ++p) {
    for (std::size_t q = p + 1; q < dom.size(); ++q) {
      const std::size_t x1 = dom[p];
      const std::size_t x2 = dom[q];
      const std::size_t u1 = s(x1);
      const std::size_t u2 = s(x2);
      acc.offer(sp.distance(a[u1], a[u2]) / sp.distance(a[x1], a[x2]), x1, x2, u1, u2);
    }
  }
  return acc.finish();
}

ContractionCertificate certify_proximal_contraction(const SetPair& sp, const PairGeometry& geom,
                                                    const ProximityMap& map) {
  MaxRatio acc;
  const auto& a = sp.a();
  for (std::size_t x1 = 0; x1 < a.size(); ++x1) {
    const auto& p1 = geom.partners_in_a.at(map(x1));
    if (p1.empty()) continue;
    for (std::size_t x2 = x1 + 1; x2 < a.size(); ++x2) {
      const auto& p2 = geom.partners_in_a.at(map(x2));
      if (p2.empty()) continue;
      const double dx = sp.distance(a[x1], a[x2]);
      for (std::size_t u1 : p1) {
        for (std::size_t u2 : p2) acc.offer(sp.distance(a[u1], a[u2]) / dx, x1, x2, u1, u2);
      }
    }
  }
  return acc.finish();
}

namespace {

// Shared driver. `step` returns the next iterate or throws; it receives the
// trace so far so that errors can carry it.
template <typename Step>
BestProximityResult iterate(const SetPair& sp, const PairGeometry& geom, const ProximityMap& map,
                            std::size_t start, const IterationOptions& opt, Step&& step) {
  const auto& a = sp.a();
  const auto& b = sp.b();
  auto residual = [&](std::size_t x) {
    return sp.distance(a[x], b[map(x)]) - geom.pair_distance;
  };

  const bool guaranteed = opt.alpha && *opt.alpha < 1.0;
  const double alpha = guaranteed ? *opt.alpha : 1.0;
  const double gap_threshold =
      guaranteed ? opt.tol * (1.0 - alpha) / std::max(alpha, opt.tol) : 0.0;

  IterationTrace trace;
  trace.points.push_back(start);
  trace.residuals.push_back(residual(start));
  std::vector<bool> visited(a.size(), false);
  visited[start] = true;

  auto finish = [&](StopReason reason) {
    trace.stop_reason = reason;
    if (guaranteed && trace.step_gaps.size() >= 1) {
      const double lead = trace.step_gaps.front() / (1.0 - alpha);
      for (std::size_t k = 0; k < trace.points.size(); ++k) {
        trace.a_priori_bounds.push_back(std::pow(alpha, static_cast<double>(k)) * lead);
      }
    }
    BestProximityResult r;
    r.point = trace.points.back();
    r.residual = trace.residuals.back();
    r.iterations = trace.step_gaps.size();
    r.guaranteed = guaranteed;
    r.trace = std::move(trace);
    return r;
  };

  std::size_t current = start;
  for (std::size_t k = 0; k < opt.max_iter; ++k) {
    const std::size_t next = step(current, trace);
    const double gap = sp.distance(a[current], a[next]);
    trace.points.push_back(next);
    trace.step_gaps.push_back(gap);
    trace.residuals.push_back(residual(next));
    if (gap == 0.0 || (guaranteed && gap <= gap_threshold)) return finish(StopReason::converged);
    if (!guaranteed && visited[next]) return finish(StopReason::cycle_detected);
    visited[next] = true;
    current = next;
  }
  trace.stop_reason = StopReason::max_iterations;
  throw MaxIterationsExceeded(std::move(trace));
}

}  // namespace

BestProximityResult banach_iterate(const SetPair& sp, const PairGeometry& geom,
                                   const ProximityMap& map, const InducedMap& s,
                                   std::size_t start, IterationOptions options) {
  if (!s.contains(start)) throw StartNotInA0(start);
  if (!options.alpha) options.alpha = certify_contraction(sp, s).alpha_hat;
  return iterate(sp, geom, map, start, options,
                 [&](std::size_t x, const IterationTrace&) { return s(x); });
}

BestProximityResult direct_iterate(const SetPair& sp, const PairGeometry& geom,
                                   const ProximityMap& map, std::size_t start,
                                   IterationOptions options) {
  if (start >= sp.a().size() || !geom.in_a0(start)) throw StartNotInA0(start);
  const auto& a = sp.a();
  const auto& b = sp.b();
  return iterate(sp, geom, map, start, options,
                 [&](std::size_t x, const IterationTrace& so_far) {
                   const std::size_t y = map(x);
                   std::size_t found = npos;
                   for (std::size_t i = 0; i < a.size(); ++i) {
                     if (!geom.proximal(sp.distance(a[i], b[y]))) continue;
                     if (found != npos) throw NonUniquePartner(x, y, found, i, so_far);
                     found = i;
                   }
                   if (found == npos) throw HypothesisViolation(x, y, so_far);
                   return found;
                 });
}

VerificationReport verify_result(const BestProximityResult& result, const SetPair& sp,
                                 const PairGeometry& geom, const ProximityMap& map, double tol,
                                 const InducedMap* s) {
  VerificationReport v;
  const std::size_t z = result.point;
  v.residual = sp.distance(sp.a().at(z), sp.b().at(map(z))) - geom.pair_distance;
  v.residual_within_tol = v.residual <= tol;
  v.lower_bound_holds = v.residual >= 0.0;
  if (s) v.fixed_under_s = s->contains(z) && (*s)(z) == z;
  return v;
}

}  // namespace proxima
