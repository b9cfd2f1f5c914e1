// Acceptance run: prints one PASS/FAIL line per criterion, exits 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "equitile/constructions.hpp"
#include "equitile/patch_io.hpp"
#include "equitile/verifier.hpp"

using namespace equitile;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  if (!ok) ++failures;
}

void run(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    report(id, title, ok, detail);
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool near_point(Point a, Point b, double eps) {
  return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

bool triangle_is(const Polygon& t, std::initializer_list<Point> pts) {
  if (t.size() != 3) return false;
  for (const Point& q : pts) {
    bool hit = false;
    for (const Point& v : t.vertices()) hit = hit || near_point(v, q, 1e-12);
    if (!hit) return false;
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Fixture {
  const char* file;
  std::function<Patch()> make;
};

// Same parameters as the CLI invocations that produced the golden files.
const Fixture kGoldens[] = {
    {"zigzag.json", [] { return zigzag_quadrant(2.0, 30); }},
    {"bounded-triangles.json",
     [] {
       ShapeRegistry r;
       return bounded_triangle_quadrant({}, r);
     }},
    {"quad-vtv.json", [] { return quad_patch_vtv(1, 42); }},
    {"pentagon.json", [] { return pentagon_patch(2, 42); }},
    {"hex14.json", [] { return hexagon_patch_vtv(2, 5, 42); }},
};

}  // namespace

int main() {
  run(1, "bounded-perimeter triangles", [] {
    const auto t0 = std::chrono::steady_clock::now();
    BoundedTriangleOptions opt;
    opt.count = 500;
    opt.c = 100;
    opt.seed = 42;
    ShapeRegistry registry;
    const Patch p = bounded_triangle_quadrant(opt, registry);
    const CheckResult a = check_unit_area(p.tiles, 1.0, 1e-9);
    const CheckResult per = check_perimeter_bound(p.tiles, 100.0);
    const CheckResult nc = check_noncongruence(p.tiles, 1e-6);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = p.tiles.size() == 500 && a.residual < 1e-9 && per.passed && nc.passed && secs < 10;
    return std::pair{ok, fmt("500 tiles, max|area-1| %.2g, max perimeter %.6g, ", a.residual, per.residual) +
                             fmt("min distance %.3g, %.2f s", nc.residual, secs)};
  });

  run(2, "zigzag oracle chain", [] {
    const Patch p = zigzag_quadrant(2.0, 3);
    const bool ok = triangle_is(p.tiles[0], {{0, 0}, {2, 0}, {0, 1}}) &&
                    triangle_is(p.tiles[1], {{2, 0}, {0, 1}, {4, 0}}) &&
                    triangle_is(p.tiles[2], {{0, 1}, {4, 0}, {0, 1.5}});
    return std::pair{ok, std::string("first three triangles within 1e-12")};
  });

  run(3, "square dissection oracle", [] {
    const Point o{0, 0};
    const SquareDissection d = solve_square_dissection(o, {1.05, 1.0}, 0.1);
    bool ok = near_point(square_edge_point(o, kLeft, d.offsets[kLeft]), {0, 6.0 / 7.0}, 1e-12) &&
              near_point(square_edge_point(o, kRight, d.offsets[kRight]), {2, 22.0 / 19.0}, 1e-12) &&
              near_point(square_edge_point(o, kTop, d.offsets[kTop]), {0.8, 2}, 1e-12);
    double worst = 0;
    for (const Polygon& q : d.quads) worst = std::max(worst, std::abs(area(q) - 1.0));
    ok = ok && worst <= 1e-12;
    return std::pair{ok, fmt("points (0,6/7) (2,22/19) (4/5,2); max|area-1| %.2g", worst)};
  });

  run(4, "constraint-line consistency", [] {
    FixedOffsets fixed;
    fixed[kBottom] = 0.1;
    fixed[kLeft] = 1.0 / 7.0;
    const CentreLine line = square_centre_line({0, 0}, fixed);
    const double s = line.parameter_for_x(1.05);
    const Point x = line.at(s);
    const std::vector<double> free{s};
    const SquareDissection d = dissect_square_constrained({0, 0}, fixed, free);
    const bool ok = std::abs(x.y - 1.0) <= 1e-12 &&
                    std::abs(d.offsets[kRight] - 3.0 / 19.0) <= 1e-12 &&
                    std::abs(d.offsets[kTop] - 0.2) <= 1e-12;
    return std::pair{ok, fmt("py = %.15g", x.y)};
  });

  run(5, "vtv quadrangles", [] {
    const QuadVtvResult r = grow_quad_vtv(1, 42);
    const auto& tiles = r.patch.tiles;
    const Polygon window({{0, 0}, {6, 0}, {6, 6}, {0, 6}});
    const bool checks = check_vtv(tiles).passed && check_unit_area(tiles, 1.0, 1e-9).passed &&
                        check_noncongruence(tiles, 1e-6).passed &&
                        check_packing_coverage(tiles, window, 1e-6).passed;
    bool ranks = r.steps.size() == 9 && r.steps[0].dof == 3;
    for (int k = 1; k < 9 && ranks; ++k) ranks = r.steps[k].dof == (k <= 4 ? 2 : 1);
    return std::pair{tiles.size() == 36 && checks && ranks,
                     fmt("%g quadrangles", static_cast<double>(tiles.size())) +
                         (checks ? ", vtv/area/noncongruence/coverage pass" : ", a check failed") +
                         (ranks ? ", ranks 3/2/1" : ", wrong ranks")};
  });

  run(6, "pentagons", [] {
    const Patch p = pentagon_patch(2, 42);
    const bool ok = p.tiles.size() == 57 && check_convexity(p.tiles).passed &&
                    check_unit_area(p.tiles, 1.0, 1e-9).passed &&
                    check_noncongruence(p.tiles, 1e-6).passed &&
                    check_packing_coverage(p.tiles, *p.region, 1e-6).passed &&
                    std::abs(area(*p.region) - 57.0) < 1e-9;
    return std::pair{ok, fmt("%g pentagons over 19 hexagons", static_cast<double>(p.tiles.size()))};
  });

  run(7, "14-gon hexagons", [] {
    const Patch p = hexagon_patch_vtv(2, 5, 42);
    const CheckResult nc = check_noncongruence(p.tiles, 1e-6);
    const bool ok = p.tiles.size() == 40 && check_vtv(p.tiles).passed &&
                    check_unit_area(p.tiles, 1.0, 1e-9).passed && nc.passed;
    return std::pair{ok, fmt("%g hexagons, min distance %.3g", static_cast<double>(p.tiles.size()), nc.residual)};
  });

  run(8, "negative controls", [] {
    const Patch h = halfstrip_patch({1.0, 1.1, 1.2}, 30);
    const bool half = check_unit_area(h.tiles, 1.0, 1e-9).passed &&
                      check_noncongruence(h.tiles, 1e-6).passed &&
                      !check_perimeter_bound(h.tiles, 100.0).passed;
    const bool quads = !check_vtv(quad_patch_nonvtv(1, 42).tiles).passed &&
                       check_vtv(quad_patch_vtv(1, 42).tiles).passed;
    return std::pair{half && quads,
                     std::string(half ? "halfstrip fails perimeter only" : "halfstrip verdicts wrong") +
                         (quads ? ", only the non-vtv quads fail vtv" : ", quad vtv verdicts wrong")};
  });

  run(9, "isometry invariance", [] {
    Rng rng(9);
    double worst_same = 0.0;
    double best_diff = kSignatureInfinity;
    int pairs = 0;
    while (pairs < 1000) {
      const int n = 3 + static_cast<int>(rng.uniform() * 5);
      std::vector<double> ang;
      for (int k = 0; k < n; ++k) ang.push_back(rng.uniform(0, 2 * std::numbers::pi));
      std::sort(ang.begin(), ang.end());
      std::vector<Point> v;
      for (double a : ang) v.push_back({std::cos(a), std::sin(a)});
      if (polygon_defect(v)) continue;
      const Polygon p(v);
      const auto sig = congruence_signature(p);
      bool thin = false;
      for (const SignatureEntry& e : sig.sequence) thin = thin || e.edge_length < 0.05 || e.interior_angle > 3.09;
      if (thin) continue;

      const double t = rng.uniform(0, 2 * std::numbers::pi);
      const Point shift{rng.uniform(-50, 50), rng.uniform(-50, 50)};
      const bool mirror = rng.uniform() < 0.5;
      std::vector<Point> w;
      for (Point q : v) {
        if (mirror) q.x = -q.x;
        w.push_back(Point{std::cos(t) * q.x - std::sin(t) * q.y, std::sin(t) * q.x + std::cos(t) * q.y} + shift);
      }
      worst_same = std::max(worst_same, signature_distance(sig, congruence_signature(Polygon(w))));

      std::vector<Point> u = v;
      const std::size_t k = static_cast<std::size_t>(rng.uniform() * u.size());
      const double a = rng.uniform(0, 2 * std::numbers::pi);
      const double r = rng.uniform(1e-3, 2e-3);
      u[k] = u[k] + Point{r * std::cos(a), r * std::sin(a)};
      if (polygon_defect(u)) continue;
      best_diff = std::min(best_diff, signature_distance(sig, congruence_signature(Polygon(u))));
      ++pairs;
    }
    return std::pair{worst_same < 1e-9 && best_diff > 1e-4,
                     fmt("max isometric distance %.2g, min perturbed distance %.2g", worst_same, best_diff)};
  });

  run(10, "determinism and golden files", [] {
    int identical = 0;
    int golden = 0;
    for (const Fixture& f : kGoldens) {
      const std::string a = patch_to_json(f.make());
      const std::string b = patch_to_json(f.make());
      identical += a == b;
      golden += a == slurp(std::string(GOLDEN_DIR) + "/" + f.file);
    }
    const double n = static_cast<double>(std::size(kGoldens));
    return std::pair{identical == n && golden == n,
                     fmt("%g/%g repeat identical, %g golden matches", identical, n, golden)};
  });

  return failures == 0 ? 0 : 1;
}
