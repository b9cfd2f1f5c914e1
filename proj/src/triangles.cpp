#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>

#include "equitile/constructions.hpp"

namespace equitile {

namespace {

const Line kHorizontalAxis{{0.0, 0.0}, {1.0, 0.0}};
const Line kVerticalAxis{{0.0, 0.0}, {0.0, 1.0}};

Point rotate(Point v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point unit(Point v) { return (1.0 / norm(v)) * v; }

double carrier_parameter(const Line& carrier, Point p) {
  return dot(p - carrier.origin, carrier.direction);
}

// Outward zigzag vertex on `carrier`: the root with the larger parameter.
CarrierPoint outward_vertex(Point a, Point b, const Line& carrier, double tile_area) {
  const auto roots = solve_third_vertex(a, b, carrier, tile_area);
  return roots.back();
}

Polygon map_polygon(const Polygon& p, double sx, double sy) {
  std::vector<Point> v;
  v.reserve(p.size());
  for (Point q : p.vertices()) v.push_back({sx * q.x, sy * q.y});
  return Polygon(std::move(v));
}

}  // namespace

Patch halfstrip_patch(const std::vector<double>& strip_widths, int triangles_per_strip) {
  if (strip_widths.size() < 2) {
    throw Error(ErrorKind::InvalidParams, "halfstrip_patch needs at least two strips");
  }
  if (triangles_per_strip < 1) {
    throw Error(ErrorKind::InvalidParams, "triangles_per_strip must be >= 1");
  }
  for (std::size_t i = 0; i < strip_widths.size(); ++i) {
    if (!(strip_widths[i] > 0.0)) throw Error(ErrorKind::InvalidParams, "strip width must be > 0");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(strip_widths[i] - strip_widths[j]) <= 1e-9) {
        throw Error(ErrorKind::DuplicateWidth,
                    "strips " + std::to_string(j) + " and " + std::to_string(i));
      }
    }
  }
  Patch patch;
  patch.construction = "halfstrip";
  patch.params["strips"] = static_cast<double>(strip_widths.size());
  patch.params["triangles_per_strip"] = triangles_per_strip;
  double y0 = 0.0;
  for (std::size_t s = 0; s < strip_widths.size(); ++s) {
    const double w = strip_widths[s];
    patch.params["width_" + std::to_string(s)] = w;
    const Point apex{0.0, y0 + w};
    const double base = 2.0 / w;
    for (int k = 0; k < triangles_per_strip; ++k) {
      patch.tiles.emplace_back(std::vector<Point>{
          apex, {k * base, y0}, {(k + 1) * base, y0}});
    }
    y0 += w;
  }
  return patch;
}

Patch zigzag_quadrant(double x0, int count, double tile_area) {
  if (!(x0 > 0.0) || count < 1 || !(tile_area > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "zigzag_quadrant needs x0 > 0, count >= 1, area > 0");
  }
  Patch patch;
  patch.construction = "zigzag";
  patch.params["x0"] = x0;
  patch.params["count"] = count;
  patch.params["area"] = tile_area;

  Point on_h{x0, 0.0};
  Point on_v = outward_vertex({0.0, 0.0}, on_h, kVerticalAxis, tile_area).point;
  patch.tiles.emplace_back(std::vector<Point>{{0.0, 0.0}, on_h, on_v});
  bool next_horizontal = true;
  while (static_cast<int>(patch.tiles.size()) < count) {
    if (next_horizontal) {
      const Point next = outward_vertex(on_h, on_v, kHorizontalAxis, tile_area).point;
      patch.tiles.emplace_back(std::vector<Point>{on_h, on_v, next});
      on_h = next;
    } else {
      const Point next = outward_vertex(on_v, on_h, kVerticalAxis, tile_area).point;
      patch.tiles.emplace_back(std::vector<Point>{on_v, on_h, next});
      on_v = next;
    }
    next_horizontal = !next_horizontal;
  }
  return patch;
}

Patch zigzag_plane(double x0, int count_per_quadrant, double q, double tile_area) {
  if (!(q > 1.0)) throw Error(ErrorKind::InvalidParams, "stretch factor q must be > 1");
  const Patch first = zigzag_quadrant(x0, count_per_quadrant, tile_area);
  Patch patch;
  patch.construction = "zigzag-plane";
  patch.params["x0"] = x0;
  patch.params["count"] = count_per_quadrant;
  patch.params["q"] = q;
  patch.params["area"] = tile_area;
  // quadrant k image: x scaled by ±q^k, y by ±q^-k (determinant ±1)
  const double sign_x[4] = {1.0, -1.0, -1.0, 1.0};
  const double sign_y[4] = {1.0, 1.0, -1.0, -1.0};
  for (int k = 0; k < 4; ++k) {
    const double f = std::pow(q, k);
    for (const Polygon& t : first.tiles) {
      patch.tiles.push_back(k == 0 ? t : map_polygon(t, sign_x[k] * f, sign_y[k] / f));
    }
  }
  return patch;
}

namespace {

constexpr double kBisectorSpread = std::numbers::pi / 36.0;

// Unbounded convex region beyond the segment pa-pb, between two carriers.
// Its boundary runs in along carrier b, across pb -> pa, and out along a.
struct ZigzagRegion {
  Line a;
  Line b;
  Point pa;
  Point pb;
  bool next_on_a = true;
};

struct FaultChoice {
  Point apex;
  Point fault_direction;
};

std::optional<FaultChoice> fault_geometry(const ZigzagRegion& r, double phi, double psi, double c) {
  const Point da = r.a.direction;
  const Point db = r.b.direction;
  const Point m = 0.5 * (r.pa + r.pb);
  const double len = distance(r.pa, r.pb);
  const Point inward = (1.0 / len) * perp(r.pa - r.pb);
  Point bisector = da + db;
  bisector = norm(bisector) > 1e-9 ? unit(bisector) : inward;
  const Point apex_dir = rotate(bisector, phi);
  const double rise = dot(apex_dir, inward);
  if (rise <= 0.1) return std::nullopt;
  // apex at height 2/len above pa-pb gives area 1
  const Point apex = m + ((2.0 / len) / rise) * apex_dir;
  const Point fault = rotate(bisector, psi);

  const Polygon tri = Polygon::trusted({r.pa, r.pb, apex});
  if (perimeter(tri) > c) return std::nullopt;
  constexpr double eps = 1e-12;
  const bool inside = cross(da, apex - r.pa) > eps && cross(db, apex - r.pb) < -eps;
  const bool left_ok = cross(-1.0 * fault, r.pa - apex) > eps && cross(r.pa - apex, da) > eps &&
                       cross(da, fault) > eps;
  const bool right_ok = cross(-1.0 * db, apex - r.pb) > eps && cross(apex - r.pb, fault) > eps &&
                        cross(fault, db) > eps;
  if (!inside || !left_ok || !right_ok) return std::nullopt;
  return FaultChoice{apex, fault};
}

}  // namespace

Patch bounded_triangle_quadrant(const BoundedTriangleOptions& opt, ShapeRegistry& registry,
                                BoundedTriangleLog* log) {
  const double c = opt.c;
  if (!(c > 0.0) || !(opt.x0 > 0.0) || !(opt.x0 < c / 3.0) || opt.count < 1) {
    throw Error(ErrorKind::InvalidParams, "bounded triangles need 0 < x0 < c/3 and count >= 1");
  }
  AvoidanceConfig cfg = opt.avoid;
  cfg.rng_seed = opt.seed;
  Avoider avoider(registry, cfg);

  Patch patch;
  patch.construction = "bounded-triangles";
  patch.seed = opt.seed;
  patch.params["c"] = c;
  patch.params["x0"] = opt.x0;
  patch.params["count"] = opt.count;

  // First triangle: x0 is the only freedom, kept within 0.05 of the request.
  const CandidateGenerator first = [c](std::span<const double> p) -> std::optional<std::vector<Polygon>> {
    const Point h{p[0], 0.0};
    const Point v = outward_vertex({0.0, 0.0}, h, kVerticalAxis, 1.0).point;
    Polygon tri({{0.0, 0.0}, h, v});
    if (perimeter(tri) > c) return std::nullopt;
    return std::vector<Polygon>{std::move(tri)};
  };
  const double x_lo = std::max(opt.x0 - 0.05, 0.5 * opt.x0);
  const double x_hi = std::min(opt.x0 + 0.05, 0.5 * (opt.x0 + c / 3.0));
  const std::vector<ParamInterval> x_box{{x_lo, x_hi}};
  const Sample t1 = avoider.sample(first, std::vector<double>{opt.x0}, x_box);
  const double x0 = t1.parameter[0];
  if (log != nullptr) log->x0_used.push_back(x0);
  patch.tiles.push_back(t1.polygons[0]);

  std::deque<ZigzagRegion> regions;
  regions.push_back({kHorizontalAxis, kVerticalAxis, t1.polygons[0].vertices()[1],
                     t1.polygons[0].vertices()[2], true});
  int faults = 0;
  const std::vector<double> fault_base{0.0, 0.0};
  const std::vector<ParamInterval> fault_box{{-kBisectorSpread, kBisectorSpread},
                                             {-kBisectorSpread, kBisectorSpread}};

  while (static_cast<int>(patch.tiles.size()) < opt.count) {
    ZigzagRegion r = regions.front();
    regions.pop_front();

    const Line& carrier = r.next_on_a ? r.a : r.b;
    const Point current = r.next_on_a ? r.pa : r.pb;
    const CarrierPoint next = outward_vertex(r.pa, r.pb, carrier, 1.0);
    bool stepped = false;
    if (next.parameter > carrier_parameter(carrier, current) + kGeomEps) {
      Polygon tri({r.pa, r.pb, next.point});
      if (perimeter(tri) <= c && avoider.try_register(std::span<const Polygon>(&tri, 1))) {
        patch.tiles.push_back(std::move(tri));
        (r.next_on_a ? r.pa : r.pb) = next.point;
        r.next_on_a = !r.next_on_a;
        regions.push_back(r);
        stepped = true;
      }
    }
    if (stepped) continue;

    // Omit the zigzag triangle; split the region with a fault half-line.
    const CandidateGenerator split = [&r, c](std::span<const double> p)
        -> std::optional<std::vector<Polygon>> {
      const auto choice = fault_geometry(r, p[0], p[1], c);
      if (!choice) return std::nullopt;
      return std::vector<Polygon>{Polygon({r.pa, r.pb, choice->apex})};
    };
    const Sample s = avoider.sample(split, fault_base, fault_box);
    const FaultChoice choice = *fault_geometry(r, s.parameter[0], s.parameter[1], c);
    if (log != nullptr && log->first_fault_tile < 0) {
      log->first_fault_tile = static_cast<int>(patch.tiles.size());
    }
    patch.tiles.push_back(s.polygons[0]);
    ++faults;
    const Line fault{choice.apex, choice.fault_direction};
    regions.push_back({r.a, fault, r.pa, choice.apex, true});
    regions.push_back({fault, r.b, choice.apex, r.pb, false});
  }
  patch.params["faults"] = faults;
  patch.params["x0_used"] = x0;
  if (log != nullptr) log->faults += faults;
  return patch;
}

Patch bounded_triangle_plane(double c, int count_per_quadrant, std::uint64_t seed, double x0,
                             BoundedTriangleLog* log) {
  ShapeRegistry registry;
  Patch patch;
  patch.construction = "bounded-triangles-plane";
  patch.seed = seed;
  patch.params["c"] = c;
  patch.params["x0"] = x0;
  patch.params["count"] = count_per_quadrant;
  // quadrants by mirror maps; the shared registry keeps them noncongruent
  const double sign_x[4] = {1.0, -1.0, -1.0, 1.0};
  const double sign_y[4] = {1.0, 1.0, -1.0, -1.0};
  double faults = 0.0;
  for (int k = 0; k < 4; ++k) {
    BoundedTriangleOptions opt;
    opt.c = c;
    opt.x0 = x0;
    opt.count = count_per_quadrant;
    opt.seed = mix_seed(seed, static_cast<std::uint64_t>(k));
    const Patch q = bounded_triangle_quadrant(opt, registry, log);
    faults += q.params.at("faults");
    for (const Polygon& t : q.tiles) {
      patch.tiles.push_back(k == 0 ? t : map_polygon(t, sign_x[k], sign_y[k]));
    }
  }
  patch.params["faults"] = faults;
  return patch;
}

}  // namespace equitile
