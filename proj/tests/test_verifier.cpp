#include <gtest/gtest.h>

#include <cmath>

#include "equitile/constructions.hpp"
#include "equitile/verifier.hpp"

using namespace equitile;

namespace {

Polygon rect(double x, double y, double w, double h) {
  return Polygon({{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}});
}

}  // namespace

TEST(Verifier, UnitAreaWitness) {
  const CheckResult r = check_unit_area({rect(0, 0, 1, 1), rect(1, 0, 1, 2)}, 1.0, 1e-9);
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.tiles.size(), 1u);
  EXPECT_EQ(r.tiles[0], 1u);
  EXPECT_NEAR(r.residual, 1.0, 1e-15);
}

TEST(Verifier, NoncongruenceFindsTranslatedCopies) {
  const Polygon t({{0, 0}, {2, 0}, {0, 1}});
  const Polygon u({{5, 5}, {7, 5}, {5, 6}});
  const CheckResult r = check_noncongruence({t, rect(9, 9, 1, 1), u}, 1e-6);
  EXPECT_FALSE(r.passed);
  EXPECT_LT(r.residual, 1e-9);
  EXPECT_EQ(r.tiles, (std::vector<std::size_t>{0, 2}));
}

TEST(Verifier, NoncongruencePassesDistinctTriangles) {
  const Polygon a({{0, 0}, {1, 0}, {0, 2}});
  const Polygon b({{0, 0}, {1, 0}, {0, 2.1}});
  const CheckResult r = check_noncongruence({a, b}, 1e-6);
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.residual, 0.05);
}

TEST(Verifier, PerimeterBoundIsInclusive) {
  EXPECT_TRUE(check_perimeter_bound({rect(0, 0, 1, 1)}, 4.0).passed);
  EXPECT_FALSE(check_perimeter_bound({rect(0, 0, 1, 1)}, 3.999).passed);
}

TEST(Verifier, HalfstripPerimeterFails) {
  const Patch p = halfstrip_patch({1.0, 1.1}, 30);
  const CheckResult r = check_perimeter_bound(p.tiles, 100.0);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.tiles[0], 29u);
}

TEST(Verifier, PackingAndCoverage) {
  const auto quads = dissect_square({0, 0}, {{0.03, 0.05}, 0.02});
  const Polygon sq = rect(0, 0, 2, 2);
  EXPECT_TRUE(check_packing_coverage(quads, sq).passed);

  std::vector<Polygon> missing(quads.begin(), quads.end() - 1);
  const CheckResult gap = check_packing_coverage(missing, sq);
  EXPECT_FALSE(gap.passed);
  EXPECT_NEAR(gap.residual, 1.0, 1e-12);

  const CheckResult over = check_packing_coverage({rect(0, 0, 1, 1), rect(0.5, 0, 1, 1)}, rect(0, 0, 1.5, 1));
  EXPECT_FALSE(over.passed);
  EXPECT_NEAR(over.residual, 0.5, 1e-15);
  EXPECT_EQ(over.tiles.size(), 2u);
}

TEST(Verifier, CoverageOfNonConvexWindow) {
  const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const std::vector<Polygon> cells{rect(0, 0, 1, 1), rect(1, 0, 1, 1), rect(0, 1, 1, 1)};
  EXPECT_TRUE(check_packing_coverage(cells, l).passed);
}

TEST(Verifier, VtvCases) {
  EXPECT_TRUE(check_vtv({rect(0, 0, 1, 1), rect(1, 1, 1, 1)}).passed);
  EXPECT_TRUE(check_vtv({rect(0, 0, 1, 1), rect(1, 0, 1, 1)}).passed);
  const CheckResult r = check_vtv({rect(0, 0, 1, 1), rect(5, 5, 1, 1), rect(1, 0.5, 1, 1)});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.tiles, (std::vector<std::size_t>{0, 2}));
}

TEST(Verifier, Radii) {
  const auto [r, c] = inradius(rect(0, 0, 1, 1));
  EXPECT_NEAR(r, 0.5, 1e-12);
  EXPECT_NEAR(c.x, 0.5, 1e-12);
  EXPECT_NEAR(circumradius(rect(0, 0, 1, 1)).first, std::sqrt(2.0) / 2, 1e-12);

  const Polygon tri({{0, 0}, {2, 0}, {0, 1}});
  EXPECT_NEAR(inradius(tri).first, 1.0 / ((3.0 + std::sqrt(5.0)) / 2.0), 1e-12);
  EXPECT_NEAR(circumradius(tri).first, std::sqrt(5.0) / 2.0, 1e-12);

  // obtuse triangle: the enclosing disc is the diametral one
  const Polygon obtuse({{0, 0}, {4, 0}, {2, 0.5}});
  EXPECT_NEAR(circumradius(obtuse).first, 2.0, 1e-12);

  const CheckResult n = check_normality_radii({rect(0, 0, 1, 1), tri});
  EXPECT_TRUE(n.passed);
  EXPECT_NEAR(n.inradius_min, inradius(tri).first, 1e-12);
  EXPECT_NEAR(n.circumradius_max, std::sqrt(5.0) / 2.0, 1e-12);
}

TEST(Verifier, OrderIndependentAndThreadIndependent) {
  const Patch p = quad_patch_nonvtv(1, 3);
  std::vector<Polygon> rev(p.tiles.rbegin(), p.tiles.rend());
  const auto a = check_noncongruence(p.tiles, 1e-6, 1);
  const auto b = check_noncongruence(rev, 1e-6, 4);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_NEAR(a.residual, b.residual, 1e-12);
  const auto c = check_vtv(p.tiles, 1);
  const auto d = check_vtv(p.tiles, 3);
  EXPECT_EQ(c.tiles, d.tiles);
  EXPECT_NEAR(check_packing_coverage(p.tiles, *p.region, 1e-6, 1).residual,
              check_packing_coverage(rev, *p.region, 1e-6, 4).residual, 1e-12);
}

TEST(Verifier, MetadataIsIgnored) {
  Patch p = quad_patch_vtv(1, 42);
  Patch bare;
  bare.tiles = p.tiles;
  CheckSpec spec;
  spec.checks = {CheckKind::UnitArea, CheckKind::Noncongruent, CheckKind::Vtv};
  const auto a = verify(p, spec);
  const auto b = verify(bare, spec);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k) {
    EXPECT_EQ(a.results[k].passed, b.results[k].passed);
    EXPECT_EQ(a.results[k].residual, b.results[k].residual);
  }
}

TEST(Verifier, AllSevenChecksOnVtvQuads) {
  const Patch p = quad_patch_vtv(1, 42);
  CheckSpec spec;
  spec.checks = {CheckKind::UnitArea, CheckKind::Noncongruent, CheckKind::Perimeter,
                 CheckKind::Convex,   CheckKind::Coverage,     CheckKind::Vtv,
                 CheckKind::Normality};
  spec.perimeter_bound = 100.0;
  const VerificationReport rep = verify(p, spec);
  EXPECT_EQ(rep.results.size(), 7u);
  EXPECT_TRUE(rep.passed());
  // packing + unit area imply tile count = window area
  EXPECT_NEAR(area(*p.region), static_cast<double>(p.tiles.size()), 1e-6);
}

TEST(Verifier, NeverShortCircuits) {
  const Patch p = halfstrip_patch({1.0, 1.1}, 30);
  CheckSpec spec;
  spec.checks = {CheckKind::Perimeter, CheckKind::UnitArea, CheckKind::Noncongruent};
  spec.perimeter_bound = 100.0;
  const VerificationReport rep = verify(p, spec);
  ASSERT_EQ(rep.results.size(), 3u);
  EXPECT_FALSE(rep.results[0].passed);
  EXPECT_TRUE(rep.results[1].passed);
  EXPECT_TRUE(rep.results[2].passed);
}

TEST(Verifier, CheckNames) {
  EXPECT_EQ(parse_check("unit-area"), CheckKind::UnitArea);
  EXPECT_EQ(to_string(CheckKind::Normality), "normality");
  EXPECT_FALSE(parse_check("area").has_value());
}
