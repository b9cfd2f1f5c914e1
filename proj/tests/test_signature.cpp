#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "equitile/registry.hpp"
#include "equitile/signature.hpp"

using namespace equitile;

namespace {

// Random convex polygon: sorted angles on a jittered circle.
Polygon random_convex(Rng& rng) {
  const int n = 3 + static_cast<int>(rng.uniform() * 5);
  std::vector<double> angles;
  for (int k = 0; k < n; ++k) angles.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
  std::sort(angles.begin(), angles.end());
  std::vector<Point> v;
  for (double a : angles) v.push_back({std::cos(a), std::sin(a)});
  return Polygon(remove_collinear(v));
}

std::vector<Point> isometry(const Polygon& p, Rng& rng) {
  const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const Point shift{rng.uniform(-50, 50), rng.uniform(-50, 50)};
  const bool mirror = rng.uniform() < 0.5;
  const std::size_t start = static_cast<std::size_t>(rng.uniform() * p.size());
  std::vector<Point> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Point q = p.vertex(start + k);
    if (mirror) q.x = -q.x;
    out.push_back(Point{std::cos(t) * q.x - std::sin(t) * q.y,
                        std::sin(t) * q.x + std::cos(t) * q.y} + shift);
  }
  return out;
}

bool well_shaped(const Polygon& p) {
  // keep the perturbation test away from near-degenerate inputs
  for (const SignatureEntry& e : congruence_signature(p).sequence) {
    if (e.edge_length < 0.05 || e.interior_angle > std::numbers::pi - 0.05) return false;
  }
  return true;
}

}  // namespace

TEST(Signature, UnitSquare) {
  const auto s = congruence_signature(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  ASSERT_EQ(s.n(), 4u);
  for (const SignatureEntry& e : s.sequence) {
    EXPECT_NEAR(e.edge_length, 1.0, 1e-15);
    EXPECT_NEAR(e.interior_angle, std::numbers::pi / 2, 1e-15);
  }
}

TEST(Signature, DifferentVertexCountsAreInfinitelyFar) {
  const auto tri = congruence_signature(Polygon({{0, 0}, {1, 0}, {0, 1}}));
  const auto sq = congruence_signature(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_GE(signature_distance(tri, sq), kSignatureInfinity);
}

TEST(Signature, MirrorImageIsCongruent) {
  const Polygon a({{0, 0}, {3, 0}, {1, 2}});
  const Polygon b({{0, 0}, {-3, 0}, {-1, 2}});
  EXPECT_LT(signature_distance(congruence_signature(a), congruence_signature(b)), 1e-12);
}

TEST(Signature, DistinctRightTriangles) {
  const Polygon a({{0, 0}, {1, 0}, {0, 2}});
  const Polygon b({{0, 0}, {1, 0}, {0, 2.1}});
  EXPECT_GE(signature_distance(congruence_signature(a), congruence_signature(b)), 0.05);
}

TEST(Signature, IsometryInvariance) {
  Rng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Polygon p = random_convex(rng);
    const Polygon q(isometry(p, rng));
    worst = std::max(worst, signature_distance(congruence_signature(p), congruence_signature(q)));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Signature, CanonicalFormIsIsometryInvariant) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon p = random_convex(rng);
    const auto a = congruence_signature(p).sequence;
    const auto b = congruence_signature(Polygon(isometry(p, rng))).sequence;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_NEAR(a[k].edge_length, b[k].edge_length, 1e-9);
      EXPECT_NEAR(a[k].interior_angle, b[k].interior_angle, 1e-9);
    }
  }
}

TEST(Signature, PerturbationIsDetected) {
  Rng rng(77);
  int done = 0;
  double best = kSignatureInfinity;
  while (done < 1000) {
    const Polygon p = random_convex(rng);
    if (!well_shaped(p)) continue;
    std::vector<Point> v = p.vertices();
    const std::size_t k = static_cast<std::size_t>(rng.uniform() * v.size());
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = rng.uniform(1e-3, 2e-3);
    v[k] = v[k] + Point{r * std::cos(a), r * std::sin(a)};
    if (polygon_defect(v)) continue;
    const double d = signature_distance(congruence_signature(p), congruence_signature(Polygon(v)));
    best = std::min(best, d);
    ++done;
  }
  EXPECT_GT(best, 1e-4);
}
