#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "equitile/constructions.hpp"

namespace equitile {

// ---------------------------------------------------------------------------
// Regular hexagon of area 3 into three pentagons

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

Point hex_vertex(Point center, double side, int k) {
  const double a = std::numbers::pi / 3.0 * k;
  return center + Point{side * std::cos(a), side * std::sin(a)};
}

Point hex_edge_point(Point center, double side, int k, double offset) {
  const Point h0 = hex_vertex(center, side, k);
  const Point h1 = hex_vertex(center, side, k + 1);
  return 0.5 * (h0 + h1) + (offset / side) * (h1 - h0);
}

// Pentagon starting on edge k: (Q_k, H_{k+1}, H_{k+2}, Q_{k+2}, X).
double pentagon_area(Point center, double side, int k, double ok, double onext, Point x) {
  const Point loop[5] = {hex_edge_point(center, side, k, ok), hex_vertex(center, side, k + 1),
                         hex_vertex(center, side, k + 2),
                         hex_edge_point(center, side, k + 2, onext), x};
  return loop_signed_area(loop);
}

double solve_pentagon_offset(Point center, double side, int k, double ok, Point x) {
  const double f0 = pentagon_area(center, side, k, ok, 0.0, x);
  const double f1 = pentagon_area(center, side, k, ok, 1.0, x);
  return (1.0 - f0) / (f1 - f0);
}

}  // namespace

double area3_hexagon_side() { return std::sqrt(2.0 / kSqrt3); }

Polygon regular_hexagon(Point center, double side) {
  std::vector<Point> v;
  for (int k = 0; k < 6; ++k) v.push_back(hex_vertex(center, side, k));
  return Polygon(std::move(v));
}

std::vector<Polygon> solve_hexagon_dissection(Point center, Point interior, double edge0_offset) {
  const double s = area3_hexagon_side();
  const double o0 = edge0_offset;
  const double o2 = solve_pentagon_offset(center, s, 0, o0, interior);
  const double o4 = solve_pentagon_offset(center, s, 2, o2, interior);
  const double offsets[3] = {o0, o2, o4};
  for (double o : offsets) {
    if (!(std::abs(o) < 0.5 * s - 1e-9)) {
      throw Error(ErrorKind::InvalidParams, "dependent edge point leaves its edge");
    }
  }
  std::vector<Polygon> out;
  for (int i = 0; i < 3; ++i) {
    const int k = 2 * i;
    out.emplace_back(std::vector<Point>{
        hex_edge_point(center, s, k, offsets[i]), hex_vertex(center, s, k + 1),
        hex_vertex(center, s, k + 2), hex_edge_point(center, s, k + 2, offsets[(i + 1) % 3]),
        interior});
  }
  return out;
}

std::vector<Polygon> dissect_hexagon(Point center, const HexagonDissectionParams& params) {
  const Point off = params.interior_offset;
  bool off_axes = norm(off) > kGeomEps;
  for (int k = 0; k < 6 && off_axes; ++k) {
    const double a = std::numbers::pi / 6.0 * k;
    off_axes = std::abs(cross({std::cos(a), std::sin(a)}, off)) > kGeomEps;
  }
  if (!(norm(off) < 0.1) || !off_axes || !(std::abs(params.edge_offset) < 0.1)) {
    throw Error(ErrorKind::InvalidParams,
                "interior point must lie within 1/10 of the centre off the mirror axes and "
                "|edge offset| < 1/10");
  }
  std::vector<Polygon> out = solve_hexagon_dissection(center, center + off, params.edge_offset);
  for (const Polygon& p : out) {
    if (!is_convex(p)) throw Error(ErrorKind::InvalidParams, "non-convex pentagon");
  }
  return out;
}

namespace {

// Axial honeycomb for flat-topped hexagons with side s.
Point axial_center(int q, int r, double s) {
  return {1.5 * s * q, kSqrt3 * s * (0.5 * q + r)};
}

}  // namespace

Patch pentagon_patch(int rings, std::uint64_t seed) {
  if (rings < 0) throw Error(ErrorKind::InvalidParams, "rings must be >= 0");
  ShapeRegistry registry;
  AvoidanceConfig cfg;
  cfg.rng_seed = seed;
  Avoider avoider(registry, cfg);
  Patch patch;
  patch.construction = "pentagon";
  patch.seed = seed;
  patch.params["rings"] = rings;
  const double s = area3_hexagon_side();
  const std::vector<double> base{0.05, 0.03, 0.04};
  const std::vector<ParamInterval> box{{-0.07, 0.07}, {-0.07, 0.07}, {-0.09, 0.09}};
  std::vector<Polygon> hosts;
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      if (std::abs(q + r) > rings) continue;
      const Point center = axial_center(q, r, s);
      hosts.push_back(regular_hexagon(center, s));
      const CandidateGenerator gen = [center](std::span<const double> p)
          -> std::optional<std::vector<Polygon>> {
        try {
          const auto out = dissect_hexagon(center, {{p[0], p[1]}, p[2]});
          return std::vector<Polygon>(out.begin(), out.end());
        } catch (const Error&) {
          return std::nullopt;
        }
      };
      Sample sample = avoider.sample(gen, base, box);
      for (Polygon& t : sample.polygons) patch.tiles.push_back(std::move(t));
    }
  }
  patch.region = union_outline(hosts);
  return patch;
}

// ---------------------------------------------------------------------------
// 14-gon: four honeycomb cells with one stretched hexagon
//
// The honeycomb (side 1, flat-topped, axial lattice A1 = (3/2, √3/2),
// A2 = (0, √3)) is cut along the lines through the cell centres with
// q + r ≡ 2 (mod 4), which run in direction A2 - A1. Everything beyond a cut
// is shifted by δ = σ - 1 along the unit normal u of the cut (60°), so each
// cell on a cut line becomes a hexagon whose two edges parallel to u grow by
// δ. Clusters {a, b, c, d} = {(0,0), (1,0), (0,1), (1,1)} and their half-turn
// images alternate along a strip; strips repeat every 4 A2.

namespace {

struct VertexId {
  int q;
  int r;
  int type;  // 0: the 0° vertex of cell (q, r), 1: its 60° vertex
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

VertexId canonical_vertex(int q, int r, int j) {
  switch (j) {
    case 0: return {q, r, 0};
    case 1: return {q, r, 1};
    case 2: return {q - 1, r + 1, 0};
    case 3: return {q - 1, r, 1};
    case 4: return {q - 1, r, 0};
    default: return {q, r - 1, 1};
  }
}

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

double stretch_delta(double stretch) { return stretch - 1.0; }

Point stretched_vertex(const VertexId& v, double stretch) {
  const Point center = axial_center(v.q, v.r, 1.0);
  const Point local = v.type == 0 ? Point{1.0, 0.0} : Point{0.5, 0.5 * kSqrt3};
  // cuts crossed: projection on u is 1.5 (q + r) + (0.5 | 1)
  const int m = v.q + v.r;
  const int shifts = floor_div(3 * m - (v.type == 0 ? 5 : 4), 12);
  const Point u{0.5, 0.5 * kSqrt3};
  return center + local + (stretch_delta(stretch) * shifts) * u;
}

struct Cell {
  int q;
  int r;
};

std::array<Cell, 4> cluster_cells(int strip, int index) {
  const int shift = index - (index % 2 != 0 ? 1 : 0);
  const int dq = -shift;
  const int dr = shift + 4 * strip;
  if (index % 2 == 0) {
    return {{{dq, dr}, {dq + 1, dr}, {dq, dr + 1}, {dq + 1, dr + 1}}};
  }
  // half-turn image: a -> (1,3), b -> (0,3), c -> (1,2), d -> (0,2)
  return {{{dq + 1, dr + 3}, {dq, dr + 3}, {dq + 1, dr + 2}, {dq, dr + 2}}};
}

double cluster_scale(double stretch) {
  // four regular hexagons plus the inserted √3 × δ strip inside d
  const double raw = 4.0 * 1.5 * kSqrt3 + kSqrt3 * stretch_delta(stretch);
  return std::sqrt(4.0 / raw);
}

void check_stretch(double stretch) {
  if (!(stretch > 1.0 && stretch <= 1.2)) {
    throw Error(ErrorKind::InvalidParams, "stretch must lie in (1, 1.2]");
  }
}

}  // namespace

FourteenGon tiling_cluster(int strip, int index, double stretch) {
  check_stretch(stretch);
  if (strip < 0 || index < 0) throw Error(ErrorKind::InvalidParams, "negative cluster position");
  const double scale = cluster_scale(stretch);
  const std::array<Cell, 4> cells = cluster_cells(strip, index);
  std::array<std::array<VertexId, 6>, 4> ids;
  std::vector<Polygon> polys;
  for (int c = 0; c < 4; ++c) {
    std::vector<Point> loop;
    for (int j = 0; j < 6; ++j) {
      ids[c][j] = canonical_vertex(cells[c].q, cells[c].r, j);
      loop.push_back(scale * stretched_vertex(ids[c][j], stretch));
    }
    polys.emplace_back(std::move(loop));
  }
  auto common = [&](int x, int y, int z) {
    for (int j = 0; j < 6; ++j) {
      const VertexId v = ids[x][j];
      const auto has = [&](int c) {
        return std::find(ids[c].begin(), ids[c].end(), v) != ids[c].end();
      };
      if (has(y) && has(z)) return polys[x][j];
    }
    throw Error(ErrorKind::InvalidPolygon, "cluster cells do not share a vertex");
  };
  const Point u = common(0, 1, 2);
  const Point w = common(3, 1, 2);

  // the two lengthened edges of d are its longest
  const Polygon& d = polys[3];
  std::array<std::size_t, 6> order{0, 1, 2, 3, 4, 5};
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return distance(d.vertex(x), d.vertex(x + 1)) > distance(d.vertex(y), d.vertex(y + 1));
  });
  std::sort(order.begin(), order.begin() + 2);
  FourteenGon g{union_outline(polys, 1e-9), polys, u, w, {}};
  for (int e = 0; e < 2; ++e) g.a_edges[e] = {d.vertex(order[e]), d.vertex(order[e] + 1)};
  return g;
}

FourteenGon build_14gon(const FourteenGonParams& params) {
  return tiling_cluster(0, 0, params.stretch);
}

namespace {

std::vector<Point> replace_vertex(const Polygon& p, Point from, Point to, std::vector<Point> loop) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (distance(p[i], from) <= 1e-12) loop[i] = to;
  }
  return loop;
}

std::vector<Point> moved(const Polygon& cell, const FourteenGon& g, Point u, Point w) {
  return replace_vertex(cell, g.w, w, replace_vertex(cell, g.u, u, cell.vertices()));
}

// Affine map X -> area of `cell` when `which` is moved to X (others fixed).
struct AffineArea {
  double alpha;
  Point grad;
};

AffineArea affine_area(const Polygon& cell, Point which, const std::vector<Point>& base_loop) {
  const auto at = [&](Point x) {
    return loop_signed_area(replace_vertex(cell, which, x, base_loop));
  };
  const double a0 = at({0.0, 0.0});
  return {a0, {at({1.0, 0.0}) - a0, at({0.0, 1.0}) - a0}};
}

struct ShiftLine {
  Point base;
  Point dir;
};

ShiftLine u_line(const FourteenGon& g) {
  const AffineArea a = affine_area(g.cells[0], g.u, g.cells[0].vertices());
  const Point base = g.u + ((1.0 - a.alpha - dot(a.grad, g.u)) / dot(a.grad, a.grad)) * a.grad;
  // orient the line from c's side toward b's side (frame independent)
  Point dir = (1.0 / norm(a.grad)) * perp(a.grad);
  const Point bc = area(g.cells[1]) > 0.0 ? (g.cells[1][0] - g.cells[2][0]) : Point{1.0, 0.0};
  if (dot(dir, bc) < 0.0) dir = -1.0 * dir;
  return {base, dir};
}

std::optional<std::vector<Polygon>> try_dissect(const FourteenGon& g, double t) {
  const ShiftLine line = u_line(g);
  const Point u = line.base + t * line.dir;
  // area(d; w) = 1 and area(b; u, w) = 1 fix w
  const AffineArea ad = affine_area(g.cells[3], g.w, g.cells[3].vertices());
  const AffineArea ab = affine_area(g.cells[1], g.w, moved(g.cells[1], g, u, g.w));
  const double det = cross(ad.grad, ab.grad);
  if (std::abs(det) < 1e-14) return std::nullopt;
  const double r1 = 1.0 - ad.alpha;
  const double r2 = 1.0 - ab.alpha;
  const Point w{(r1 * ab.grad.y - ad.grad.y * r2) / det, (ad.grad.x * r2 - r1 * ab.grad.x) / det};
  std::vector<Polygon> out;
  for (const Polygon& cell : g.cells) {
    std::vector<Point> loop = moved(cell, g, u, w);
    if (polygon_defect(loop) || loop_signed_area(loop) <= 0.0) return std::nullopt;
    Polygon p(std::move(loop));
    if (!is_convex(p) || std::abs(area(p) - 1.0) > 1e-9) return std::nullopt;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ShiftInterval feasible_shift_interval(const FourteenGon& g) {
  if (!try_dissect(g, 0.0)) throw Error(ErrorKind::InfeasibleShift, "no feasible shift at 0");
  double bounds[2];
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? -1.0 : 1.0;
    double good = 0.0;
    double step = 1e-3;
    double bad = good + sign * step;
    while (try_dissect(g, bad)) {
      good = bad;
      step *= 2.0;
      bad = good + sign * step;
      if (std::abs(bad) > 10.0) break;
    }
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (good + bad);
      (try_dissect(g, mid) ? good : bad) = mid;
    }
    bounds[side] = good;
  }
  return {bounds[0], bounds[1]};
}

std::vector<Polygon> dissect_14gon(const FourteenGon& g, double t) {
  const ShiftInterval iv = feasible_shift_interval(g);
  if (!(t >= iv.lo && t <= iv.hi)) {
    throw Error(ErrorKind::InfeasibleShift, "shift outside the feasible interval");
  }
  auto out = try_dissect(g, t);
  if (!out) throw Error(ErrorKind::InfeasibleShift, "dissection degenerate at this shift");
  return *out;
}

Patch hexagon_patch_vtv(int strips, int cells_per_strip, std::uint64_t seed, double stretch) {
  if (strips < 1 || cells_per_strip < 1) {
    throw Error(ErrorKind::InvalidParams, "strips and cells must be >= 1");
  }
  check_stretch(stretch);
  ShapeRegistry registry;
  AvoidanceConfig cfg;
  cfg.rng_seed = seed;
  Avoider avoider(registry, cfg);
  Patch patch;
  patch.construction = "hex14";
  patch.seed = seed;
  patch.params["strips"] = strips;
  patch.params["cells"] = cells_per_strip;
  patch.params["stretch"] = stretch;
  for (int j = 0; j < strips; ++j) {
    for (int k = 0; k < cells_per_strip; ++k) {
      const FourteenGon g = tiling_cluster(j, k, stretch);
      const ShiftInterval iv = feasible_shift_interval(g);
      const double span = iv.hi - iv.lo;
      // the midpoint keeps the cluster's mirror symmetry (b congruent to c)
      const std::vector<double> base{iv.lo + 0.3 * span};
      const std::vector<ParamInterval> box{{iv.lo + 0.05 * span, iv.hi - 0.05 * span}};
      const CandidateGenerator gen = [&g](std::span<const double> p) {
        return try_dissect(g, p[0]);
      };
      Sample s = avoider.sample(gen, base, box);
      for (Polygon& t : s.polygons) patch.tiles.push_back(std::move(t));
    }
  }
  patch.region = union_outline(patch.tiles);
  return patch;
}

}  // namespace equitile
