#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equitile/geometry.hpp"
#include "equitile/registry.hpp"

namespace equitile {

/// A finite piece of a tiling plus what produced it.
struct Patch {
  std::vector<Polygon> tiles;
  std::string construction;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  std::optional<Polygon> region;  // exactly covered subset, when known
};

// ---------------------------------------------------------------------------
// Triangles

/// Fans of unit-area triangles in stacked half-strips [0, ∞) × [y, y + w].
/// Deliberately unbounded perimeter and not locally finite.
Patch halfstrip_patch(const std::vector<double>& strip_widths, int triangles_per_strip);

/// Zigzag between the positive axes starting with the triangle (0, (x0,0), ·).
Patch zigzag_quadrant(double x0, int count, double tile_area = 1.0);

/// Four zigzag quadrants; quadrant k is the image of quadrant 1 under the
/// area-preserving map (x, y) -> (±q^k x, ±y / q^k).
Patch zigzag_plane(double x0, int count_per_quadrant, double q = 1.4142135623730951,
                   double tile_area = 1.0);

struct BoundedTriangleOptions {
  double c = 100.0;
  double x0 = 2.0;
  int count = 500;
  std::uint64_t seed = 42;
  AvoidanceConfig avoid{};
};

/// Statistics of a bounded-triangle run, mostly for tests.
struct BoundedTriangleLog {
  int faults = 0;
  int first_fault_tile = -1;  // index of the first fault-apex triangle
  std::vector<double> x0_used;
};

/// Zigzag with fault half-lines whenever the next triangle would exceed the
/// perimeter cap c. Emitted triangles are registered in `registry`.
Patch bounded_triangle_quadrant(const BoundedTriangleOptions& opt, ShapeRegistry& registry,
                                BoundedTriangleLog* log = nullptr);

Patch bounded_triangle_plane(double c, int count_per_quadrant, std::uint64_t seed,
                             double x0 = 2.0, BoundedTriangleLog* log = nullptr);

// ---------------------------------------------------------------------------
// Quadrangles (side-2 squares)

/// Edge ids of a square, counterclockwise from the bottom edge.
enum SquareEdge : int { kBottom = 0, kRight = 1, kTop = 2, kLeft = 3 };

/// Point x relative to the centre and y1's signed offset along the bottom edge.
struct SquareDissectionParams {
  Point center_offset;
  double boundary_offset = 0.0;
};

/// Full description of a dissected square: boundary offsets measured from
/// each edge midpoint along the counterclockwise edge direction.
struct SquareDissection {
  Point origin;
  Point centre;  // global coordinates
  std::array<double, 4> offsets{};
  std::vector<Polygon> quads;  // quad k sits at the corner ending edge k
};

/// Global point on `edge` of the side-2 square at `origin` with `offset`.
Point square_edge_point(Point origin, int edge, double offset);

/// Raw solver without admissibility checks: centre x and the bottom point
/// are given in global coordinates, the other three points are solved
/// corner by corner so that every quadrangle has unit area.
SquareDissection solve_square_dissection(Point origin, Point centre, double bottom_offset);

/// Validated dissection (|x - centre| < 1/10 off all mirror axes,
/// |y1 offset| < 1/10). Throws Error(InvalidParams).
std::vector<Polygon> dissect_square(Point origin, const SquareDissectionParams& params);
SquareDissection dissect_square_full(Point origin, const SquareDissectionParams& params);

Patch quad_patch_nonvtv(int grid_radius, std::uint64_t seed);

/// Fixed boundary offsets inherited from placed neighbours.
using FixedOffsets = std::array<std::optional<double>, 4>;

/// The line to which two fixed adjacent offsets confine the centre.
struct CentreLine {
  Point base;       // closest point to the square centre
  Point direction;  // unit
  Point at(double s) const { return base + s * direction; }
  double parameter_for_x(double x) const { return (x - base.x) / direction.x; }
};

/// Degrees of freedom left by the fixed offsets (3 minus their count).
int square_dof(const FixedOffsets& fixed);

/// Centre line for two fixed adjacent edges, in global coordinates.
CentreLine square_centre_line(Point origin, const FixedOffsets& fixed);

/// Default free parameters for the given constraint (size == square_dof).
std::vector<double> square_base_params(Point origin, const FixedOffsets& fixed);

/// Solves the unit-area equations given fixed offsets and the free
/// parameters: (cx, cy, bottom offset) with none fixed, (cx, cy) with one,
/// the position s along the CentreLine with two adjacent ones. Throws
/// Error(InfeasibleConstraint) if the result leaves the admissible set.
SquareDissection dissect_square_constrained(Point origin, const FixedOffsets& fixed,
                                            std::span<const double> free_params);

struct SquareStep {
  int i;  // lattice cell
  int j;
  int dof;
  int attempts;
};

struct QuadVtvResult {
  Patch patch;
  std::vector<SquareStep> steps;  // in growth order
};

/// Growth order: centre, its four edge neighbours, the four corners, then
/// ring by ring (axis squares first, then walking toward the ring corners).
std::vector<std::pair<int, int>> vtv_growth_order(int rings);

QuadVtvResult grow_quad_vtv(int rings, std::uint64_t seed);
Patch quad_patch_vtv(int rings, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Pentagons (regular hexagons of area 3)

/// Side length of the regular hexagon of area 3.
double area3_hexagon_side();
Polygon regular_hexagon(Point center, double side);

struct HexagonDissectionParams {
  Point interior_offset;      // interior point relative to the centre
  double edge_offset = 0.0;   // dissection point on edge 0, from its midpoint
};

/// Three unit-area pentagons (Q0 H1 H2 Q2 X), (Q2 H3 H4 Q4 X), (Q4 H5 H0 Q0 X)
/// with Q_k on edge k. Solver only; no admissibility checks.
std::vector<Polygon> solve_hexagon_dissection(Point center, Point interior,
                                                double edge0_offset);
std::vector<Polygon> dissect_hexagon(Point center, const HexagonDissectionParams& params);

Patch pentagon_patch(int rings, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Hexagons (non-convex 14-gons)

struct FourteenGonParams {
  double stretch = 1.05;
};

/// Cluster of four honeycomb cells (a, b, c, d) in which d is stretched.
/// u is the vertex shared by a, b, c; w the vertex shared by b, c, d.
struct FourteenGon {
  Polygon outline;
  std::vector<Polygon> cells;
  Point u;
  Point w;
  std::array<std::pair<Point, Point>, 2> a_edges;  // lengthened edges of d
};

FourteenGon build_14gon(const FourteenGonParams& params);

struct ShiftInterval {
  double lo;
  double hi;
  double mid() const { return 0.5 * (lo + hi); }
};

/// Range of the shift t for which all four hexagons stay convex.
ShiftInterval feasible_shift_interval(const FourteenGon& g);

/// Moves u by t along its unit-area line and solves w from the remaining
/// area equations. Throws Error(InfeasibleShift) outside the interval.
std::vector<Polygon> dissect_14gon(const FourteenGon& g, double t);

/// Cluster `index` of strip `strip` of the tiling, positioned in the plane.
FourteenGon tiling_cluster(int strip, int index, double stretch);

Patch hexagon_patch_vtv(int strips, int cells_per_strip, std::uint64_t seed,
                        double stretch = 1.05);

}  // namespace equitile
