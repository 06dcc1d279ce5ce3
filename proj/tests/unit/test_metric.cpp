#include <gtest/gtest.h>

#include <random>

#include "proxima/errors.hpp"
#include "proxima/metric.hpp"
#include "reference.hpp"

namespace proxima {
namespace {

TEST(Distance, EuclideanIdentity) {
  const auto m = Metric::euclidean(2);
  EXPECT_EQ(distance(m, Point(Coords{0, 0}), Point(Coords{0, 0})), 0.0);
}

TEST(Distance, EuclideanPythagorean) {
  const auto m = Metric::euclidean(2);
  EXPECT_EQ(distance(m, Point(Coords{0, 0}), Point(Coords{3, 4})), 5.0);
}

TEST(Distance, ExplicitMatrixLookup) {
  const auto m = Metric::explicit_matrix({{0, 2}, {2, 0}});
  EXPECT_EQ(distance(m, Point(std::size_t{0}), Point(std::size_t{1})), 2.0);
}

TEST(Distance, DimensionMismatch) {
  const auto m = Metric::euclidean(2);
  EXPECT_THROW(distance(m, Point(Coords{0, 0}), Point(Coords{1, 2, 3})), DimensionMismatch);
  EXPECT_THROW(distance(m, Point(Coords{0, 0}), Point(std::size_t{0})), DimensionMismatch);
}

TEST(Distance, IndexOutOfRange) {
  const auto m = Metric::explicit_matrix({{0, 2}, {2, 0}});
  EXPECT_THROW(distance(m, Point(std::size_t{0}), Point(std::size_t{2})), IndexOutOfRange);
}

TEST(Distance, NonFiniteCoordinateRejected) {
  const auto m = Metric::euclidean(1);
  EXPECT_THROW(distance(m, Point(Coords{NAN}), Point(Coords{0})), InvalidInstance);
}

TEST(MetricConstruction, RejectsBadTables) {
  EXPECT_THROW(Metric::explicit_matrix({}), InvalidInstance);
  EXPECT_THROW(Metric::explicit_matrix({{0, 1}, {1}}), InvalidInstance);
  EXPECT_THROW(Metric::explicit_matrix({{0, INFINITY}, {1, 0}}), InvalidInstance);
  EXPECT_THROW(Metric::euclidean(0), InvalidInstance);
}

TEST(ValidateMetric, TwoPointMetricPasses) {
  const auto r = validate_metric(Metric::explicit_matrix({{0, 1}, {1, 0}}), 1);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.exhaustive);
}

TEST(ValidateMetric, AsymmetricMatrixFailsSymmetry) {
  const auto r = validate_metric(Metric::explicit_matrix({{0, 1}, {2, 0}}), 1);
  ASSERT_FALSE(r.holds(Axiom::symmetry));
  const auto* v = r.violation(Axiom::symmetry);
  ASSERT_EQ(v->witness.size(), 2u);
  EXPECT_EQ(v->witness[0].index(), 0u);
  EXPECT_EQ(v->witness[1].index(), 1u);
  EXPECT_TRUE(r.holds(Axiom::triangle));
}

TEST(ValidateMetric, TriangleViolationWitness) {
  const DistanceTable t{{0, 1, 3}, {1, 0, 1}, {3, 1, 0}};
  // Oracle: exhaustive ordered-triple scan.
  const auto expected = reference::triangle_violation(t);
  ASSERT_TRUE(expected);
  EXPECT_EQ(*expected, std::make_tuple(std::size_t{0}, std::size_t{2}, std::size_t{1}));

  const auto r = validate_metric(Metric::explicit_matrix(t), 1);
  ASSERT_FALSE(r.holds(Axiom::triangle));
  const auto* v = r.violation(Axiom::triangle);
  ASSERT_EQ(v->witness.size(), 3u);
  EXPECT_EQ(v->witness[0].index(), std::get<0>(*expected));
  EXPECT_EQ(v->witness[1].index(), std::get<1>(*expected));
  EXPECT_EQ(v->witness[2].index(), std::get<2>(*expected));
  EXPECT_TRUE(r.holds(Axiom::symmetry));
}

TEST(ValidateMetric, IdentityFailures) {
  const auto diag = validate_metric(Metric::explicit_matrix({{1, 1}, {1, 0}}), 1);
  EXPECT_FALSE(diag.holds(Axiom::identity));
  const auto merged = validate_metric(Metric::explicit_matrix({{0, 0}, {0, 0}}), 1);
  EXPECT_FALSE(merged.holds(Axiom::identity));
  const auto neg = validate_metric(Metric::explicit_matrix({{0, -1}, {-1, 0}}), 1);
  EXPECT_FALSE(neg.holds(Axiom::nonnegativity));
}

TEST(ValidateMetric, EuclideanSamplingIsReproducible) {
  const auto m = Metric::euclidean(3);
  const auto r1 = validate_metric(m, 500, 42);
  const auto r2 = validate_metric(m, 500, 42);
  EXPECT_TRUE(r1.passed());
  EXPECT_FALSE(r1.exhaustive);
  EXPECT_EQ(r1.triples_checked, 500u);
  EXPECT_EQ(r1.triples_checked, r2.triples_checked);
}

TEST(ValidateMetric, LargeMatrixIsSampled) {
  const std::size_t n = kExhaustiveValidationLimit + 1;
  DistanceTable t(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 0.0;
  const auto r = validate_metric(Metric::explicit_matrix(t), 300);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.triples_checked, 300u);
}

// Metric axioms on random coordinate points.
TEST(DistanceProperties, EuclideanAxiomsOnRandomPoints) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(-1e3, 1e3);
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    const auto m = Metric::euclidean(dim);
    for (int trial = 0; trial < 500; ++trial) {
      Coords p(dim), q(dim), r(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        p[i] = c(rng);
        q[i] = c(rng);
        r[i] = c(rng);
      }
      const Point P(p), Q(q), R(r);
      EXPECT_EQ(distance(m, P, Q), distance(m, Q, P));
      EXPECT_EQ(distance(m, P, P), 0.0);
      EXPECT_LE(distance(m, P, R), distance(m, P, Q) + distance(m, Q, R) + kMetricSlack);
      EXPECT_NEAR(distance(m, P, Q), reference::dist(m, P, Q), 1e-12);
    }
  }
}

TEST(PointFormatting, IndexAndCoords) {
  EXPECT_EQ(to_string(Point(std::size_t{3})), "#3");
  EXPECT_EQ(to_string(Point(Coords{1, 0.5})), "(1, 0.5)");
}

}  // namespace
}  // namespace proxima
