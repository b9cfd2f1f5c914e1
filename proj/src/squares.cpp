#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "equitile/constructions.hpp"

namespace equitile {

namespace {

constexpr double kSide = 2.0;
// |x - centre| and |y1 offset| bound of the unconstrained dissection.
constexpr double kNearCentre = 0.1;
// Offsets inherited from neighbours may drift past 1/10; they only need to
// keep the quadrangles convex.
constexpr double kInheritedOffsetBound = 0.5;

const Point kCorners[4] = {{0.0, 0.0}, {kSide, 0.0}, {kSide, kSide}, {0.0, kSide}};
const Point kMidpoints[4] = {{1.0, 0.0}, {kSide, 1.0}, {1.0, kSide}, {0.0, 1.0}};
const Point kDirections[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

Point local_edge_point(int edge, double offset) {
  return kMidpoints[edge] + offset * kDirections[edge];
}

// Quadrangle at the corner that ends edge k: (P_k, C_{k+1}, P_{k+1}, X).
double corner_area(int k, double ok, double onext, Point x) {
  const Point loop[4] = {local_edge_point(k, ok), kCorners[(k + 1) % 4],
                         local_edge_point((k + 1) % 4, onext), x};
  return loop_signed_area(loop);
}

// The corner area is affine in either offset; solve for unit area.
double solve_next_offset(int k, double ok, Point x) {
  const double f0 = corner_area(k, ok, 0.0, x);
  const double f1 = corner_area(k, ok, 1.0, x);
  return (1.0 - f0) / (f1 - f0);
}

double solve_prev_offset(int k, double onext, Point x) {
  const double f0 = corner_area(k, 0.0, onext, x);
  const double f1 = corner_area(k, 1.0, onext, x);
  return (1.0 - f0) / (f1 - f0);
}

SquareDissection assemble(Point origin, Point local_centre, const std::array<double, 4>& offsets) {
  SquareDissection d;
  d.origin = origin;
  d.centre = origin + local_centre;
  d.offsets = offsets;
  for (int k = 0; k < 4; ++k) {
    const int n = (k + 1) % 4;
    d.quads.emplace_back(std::vector<Point>{origin + local_edge_point(k, offsets[k]),
                                            origin + kCorners[n],
                                            origin + local_edge_point(n, offsets[n]), d.centre});
  }
  return d;
}

bool dissection_ok(const SquareDissection& d) {
  for (double o : d.offsets) {
    if (!(std::abs(o) < 1.0 - 1e-9)) return false;
  }
  for (const Polygon& q : d.quads) {
    if (!is_convex(q) || std::abs(area(q) - 1.0) > 1e-9) return false;
  }
  return true;
}

// Fills unknown offsets by walking counterclockwise from the known ones.
void propagate(std::array<std::optional<double>, 4>& o, Point x) {
  for (int pass = 0; pass < 4; ++pass) {
    for (int k = 0; k < 4; ++k) {
      const int n = (k + 1) % 4;
      if (o[k] && !o[n]) o[n] = solve_next_offset(k, *o[k], x);
    }
  }
  for (int k = 0; k < 4; ++k) {
    const int n = (k + 1) % 4;
    if (!o[k] && o[n]) o[k] = solve_prev_offset(k, *o[n], x);
  }
}

std::array<double, 4> unwrap(const std::array<std::optional<double>, 4>& o) {
  return {o[0].value(), o[1].value(), o[2].value(), o[3].value()};
}

// First of the two adjacent fixed edges (the corner between them ends it).
int adjacent_pair_start(const FixedOffsets& fixed) {
  for (int e = 0; e < 4; ++e) {
    if (fixed[e] && fixed[(e + 1) % 4]) return e;
  }
  return -1;
}

}  // namespace

Point square_edge_point(Point origin, int edge, double offset) {
  return origin + local_edge_point(edge, offset);
}

SquareDissection solve_square_dissection(Point origin, Point centre, double bottom_offset) {
  const Point x = centre - origin;
  std::array<std::optional<double>, 4> o{bottom_offset, std::nullopt, std::nullopt, std::nullopt};
  propagate(o, x);
  return assemble(origin, x, unwrap(o));
}

SquareDissection dissect_square_full(Point origin, const SquareDissectionParams& params) {
  const Point c = params.center_offset;
  const bool near = norm(c) < kNearCentre;
  const bool off_axes = std::abs(c.x) > kGeomEps && std::abs(c.y) > kGeomEps &&
                        std::abs(std::abs(c.x) - std::abs(c.y)) > kGeomEps;
  if (!near || !off_axes || !(std::abs(params.boundary_offset) < kNearCentre)) {
    throw Error(ErrorKind::InvalidParams,
                "centre offset must lie in the open 1/10 ball off the mirror axes and "
                "|boundary offset| < 1/10");
  }
  const Point x = Point{1.0, 1.0} + c;
  std::array<std::optional<double>, 4> o{params.boundary_offset, std::nullopt, std::nullopt,
                                         std::nullopt};
  propagate(o, x);
  const std::array<double, 4> offsets = unwrap(o);
  for (double v : offsets) {
    if (!(std::abs(v) < 1.0 - 1e-9)) {
      throw Error(ErrorKind::InvalidParams, "dependent boundary point leaves its edge");
    }
  }
  SquareDissection d = assemble(origin, x, offsets);
  if (!dissection_ok(d)) throw Error(ErrorKind::InvalidParams, "non-convex quadrangle");
  return d;
}

std::vector<Polygon> dissect_square(Point origin, const SquareDissectionParams& params) {
  return dissect_square_full(origin, params).quads;
}

Patch quad_patch_nonvtv(int grid_radius, std::uint64_t seed) {
  if (grid_radius < 0) throw Error(ErrorKind::InvalidParams, "grid_radius must be >= 0");
  ShapeRegistry registry;
  AvoidanceConfig cfg;
  cfg.rng_seed = seed;
  Avoider avoider(registry, cfg);
  const int n = 2 * grid_radius + 1;
  Patch patch;
  patch.construction = "quad";
  patch.seed = seed;
  patch.params["rings"] = grid_radius;
  const std::vector<double> base{0.05, 0.03, 0.04};
  const std::vector<ParamInterval> box{{-0.07, 0.07}, {-0.07, 0.07}, {-0.09, 0.09}};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Point origin{kSide * i, kSide * j};
      const CandidateGenerator gen = [origin](std::span<const double> p)
          -> std::optional<std::vector<Polygon>> {
        try {
          return dissect_square(origin, {{p[0], p[1]}, p[2]});
        } catch (const Error&) {
          return std::nullopt;
        }
      };
      Sample s = avoider.sample(gen, base, box);
      for (Polygon& q : s.polygons) patch.tiles.push_back(std::move(q));
    }
  }
  const double L = kSide * n;
  patch.region = Polygon({{0.0, 0.0}, {L, 0.0}, {L, L}, {0.0, L}});
  return patch;
}

int square_dof(const FixedOffsets& fixed) {
  return 3 - static_cast<int>(std::count_if(fixed.begin(), fixed.end(),
                                            [](const auto& o) { return o.has_value(); }));
}

CentreLine square_centre_line(Point origin, const FixedOffsets& fixed) {
  const int e = adjacent_pair_start(fixed);
  if (square_dof(fixed) != 1 || e < 0) {
    throw Error(ErrorKind::InvalidParams, "centre line needs exactly two adjacent fixed edges");
  }
  const int n = (e + 1) % 4;
  // corner area = alpha + g . X in local coordinates
  const double alpha = corner_area(e, *fixed[e], *fixed[n], {0.0, 0.0});
  const Point g{corner_area(e, *fixed[e], *fixed[n], {1.0, 0.0}) - alpha,
                corner_area(e, *fixed[e], *fixed[n], {0.0, 1.0}) - alpha};
  const Point c{1.0, 1.0};
  const Point base = c + ((1.0 - alpha - dot(g, c)) / dot(g, g)) * g;
  Point dir = (1.0 / norm(g)) * perp(g);
  if (dir.x < 0.0 || (dir.x == 0.0 && dir.y < 0.0)) dir = -1.0 * dir;
  return {origin + base, dir};
}

std::vector<double> square_base_params(Point, const FixedOffsets& fixed) {
  switch (square_dof(fixed)) {
    case 3:
      return {0.05, 0.03, 0.04};
    case 2: {
      int e = 0;
      while (!fixed[e]) ++e;
      // centre that makes both neighbouring offsets vanish, pulled into the ball
      const int p = (e + 3) % 4;
      auto lin = [&](auto area_at) {
        const double a0 = area_at(Point{0.0, 0.0});
        return std::array<double, 3>{area_at(Point{1.0, 0.0}) - a0, area_at(Point{0.0, 1.0}) - a0,
                                     1.0 - a0};
      };
      const auto r1 = lin([&](Point x) { return corner_area(e, *fixed[e], 0.0, x); });
      const auto r2 = lin([&](Point x) { return corner_area(p, 0.0, *fixed[e], x); });
      const double det = r1[0] * r2[1] - r1[1] * r2[0];
      Point off{0.0, 0.0};
      if (std::abs(det) > 1e-12) {
        const Point x{(r1[2] * r2[1] - r1[1] * r2[2]) / det, (r1[0] * r2[2] - r1[2] * r2[0]) / det};
        off = x - Point{1.0, 1.0};
      }
      const double r = norm(off);
      if (r > 0.06) off = (0.06 / r) * off;
      return {off.x, off.y};
    }
    case 1:
      return {0.0};
    default:
      throw Error(ErrorKind::InvalidParams, "at most two fixed offsets are supported");
  }
}

SquareDissection dissect_square_constrained(Point origin, const FixedOffsets& fixed,
                                            std::span<const double> free_params) {
  const int dof = square_dof(fixed);
  if (dof < 1) throw Error(ErrorKind::InvalidParams, "at most two fixed offsets are supported");
  if (static_cast<int>(free_params.size()) != dof) {
    throw Error(ErrorKind::InvalidParams, "expected " + std::to_string(dof) + " free parameters");
  }
  if (dof == 3) {
    return dissect_square_full(origin, {{free_params[0], free_params[1]}, free_params[2]});
  }
  for (const auto& o : fixed) {
    if (o && !(std::abs(*o) < kInheritedOffsetBound)) {
      throw Error(ErrorKind::InfeasibleConstraint, "fixed offset too far from its edge midpoint");
    }
  }
  Point x;
  if (dof == 2) {
    x = Point{1.0, 1.0} + Point{free_params[0], free_params[1]};
  } else {
    if (adjacent_pair_start(fixed) < 0) {
      throw Error(ErrorKind::InvalidParams, "two fixed offsets must be on adjacent edges");
    }
    const CentreLine line = square_centre_line(origin, fixed);
    x = line.at(free_params[0]) - origin;
  }
  if (!(norm(x - Point{1.0, 1.0}) < kNearCentre)) {
    throw Error(ErrorKind::InfeasibleConstraint, "centre forced outside its 1/10 ball");
  }
  std::array<std::optional<double>, 4> o = fixed;
  propagate(o, x);
  SquareDissection d;
  try {
    const std::array<double, 4> offsets = unwrap(o);
    for (double v : offsets) {
      if (!(std::abs(v) < 1.0 - 1e-9)) {
        throw Error(ErrorKind::InfeasibleConstraint, "dependent point leaves its edge");
      }
    }
    d = assemble(origin, x, offsets);
  } catch (const Error& err) {
    throw Error(ErrorKind::InfeasibleConstraint, err.what());
  }
  if (!dissection_ok(d)) throw Error(ErrorKind::InfeasibleConstraint, "non-convex quadrangle");
  return d;
}

std::vector<std::pair<int, int>> vtv_growth_order(int rings) {
  std::vector<std::pair<int, int>> order{{0, 0}};
  for (int k = 1; k <= rings; ++k) {
    order.insert(order.end(), {{k, 0}, {0, k}, {-k, 0}, {0, -k}});
    for (int m = 1; m < k; ++m) {
      order.insert(order.end(), {{k, m}, {k, -m}, {m, k}, {-m, k},
                                 {-k, m}, {-k, -m}, {m, -k}, {-m, -k}});
    }
    order.insert(order.end(), {{k, k}, {-k, k}, {-k, -k}, {k, -k}});
  }
  return order;
}

QuadVtvResult grow_quad_vtv(int rings, std::uint64_t seed) {
  if (rings < 0) throw Error(ErrorKind::InvalidParams, "rings must be >= 0");
  ShapeRegistry registry;
  AvoidanceConfig cfg;
  cfg.rng_seed = seed;
  Avoider avoider(registry, cfg);
  QuadVtvResult result;
  Patch& patch = result.patch;
  patch.construction = "quad-vtv";
  patch.seed = seed;
  patch.params["rings"] = rings;

  std::map<std::pair<int, int>, std::array<double, 4>> placed;
  // neighbour offset across edge k, with its edge id on the neighbour side
  const int di[4] = {0, 1, 0, -1};
  const int dj[4] = {-1, 0, 1, 0};
  for (const auto& [i, j] : vtv_growth_order(rings)) {
    const Point origin{kSide * (i + rings), kSide * (j + rings)};
    FixedOffsets fixed;
    for (int k = 0; k < 4; ++k) {
      const auto it = placed.find({i + di[k], j + dj[k]});
      if (it != placed.end()) fixed[k] = -it->second[(k + 2) % 4];
    }
    const int dof = square_dof(fixed);
    const std::vector<double> base = square_base_params(origin, fixed);
    std::vector<ParamInterval> box;
    if (dof == 3) {
      box = {{-0.07, 0.07}, {-0.07, 0.07}, {-0.09, 0.09}};
    } else if (dof == 2) {
      box = {{base[0] - 0.03, base[0] + 0.03}, {base[1] - 0.03, base[1] + 0.03}};
    } else {
      box = {{-0.03, 0.03}};
    }
    SquareDissection solved;
    const CandidateGenerator gen = [&](std::span<const double> p)
        -> std::optional<std::vector<Polygon>> {
      try {
        solved = dissect_square_constrained(origin, fixed, p);
        return solved.quads;
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    const Sample s = avoider.sample(gen, base, box);
    // re-solve: `solved` may hold a later rejected candidate
    solved = dissect_square_constrained(origin, fixed, s.parameter);
    placed[{i, j}] = solved.offsets;
    result.steps.push_back({i, j, dof, s.attempts});
    for (const Polygon& q : solved.quads) patch.tiles.push_back(q);
  }
  const double L = kSide * (2 * rings + 1);
  patch.region = Polygon({{0.0, 0.0}, {L, 0.0}, {L, L}, {0.0, L}});
  return result;
}

Patch quad_patch_vtv(int rings, std::uint64_t seed) { return grow_quad_vtv(rings, seed).patch; }

}  // namespace equitile
