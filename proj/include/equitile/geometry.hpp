#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "equitile/error.hpp"

namespace equitile {

/// Comparison tolerance for geometric predicates (plane units).
inline constexpr double kGeomEps = 1e-9;
/// Tolerance on area targets.
inline constexpr double kAreaEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point lerp(Point a, Point b, double t) { return a + t * (b - a); }

/// Shoelace signed area of an arbitrary vertex loop (no validation).
double loop_signed_area(std::span<const Point> loop);

/// A simple polygon with counterclockwise vertex order and no redundant
/// (collinear) corners. Construction validates and normalizes orientation;
/// invalid input throws Error(InvalidPolygon).
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  /// Skips validation. Caller guarantees the invariants (used for hot paths
  /// where vertices come from an already-valid polygon).
  static Polygon trusted(std::vector<Point> ccw_vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  Point operator[](std::size_t i) const { return vertices_[i]; }
  Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

 private:
  Polygon() = default;
  std::vector<Point> vertices_;
};

/// Returns the reason a vertex loop is not a valid polygon, or nullopt.
std::optional<std::string> polygon_defect(std::span<const Point> loop);

/// Drops vertices whose two incident edges are collinear within kGeomEps.
std::vector<Point> remove_collinear(std::vector<Point> loop);

double signed_area(const Polygon& p);
double area(const Polygon& p);
double perimeter(const Polygon& p);
bool is_convex(const Polygon& p);

struct BBox {
  Point lo;
  Point hi;
  bool overlaps(const BBox& o, double eps) const {
    return lo.x <= o.hi.x + eps && o.lo.x <= hi.x + eps && lo.y <= o.hi.y + eps &&
           o.lo.y <= hi.y + eps;
  }
};
BBox bbox(const Polygon& p);

struct HalfLine {
  Point origin;
  Point direction;  // unit

  HalfLine(Point origin, Point direction);
  Point at(double s) const { return origin + s * direction; }
};

/// A full line (both directions) in parametric form.
struct Line {
  Point origin;
  Point direction;
  Point at(double s) const { return origin + s * direction; }
};

struct CarrierPoint {
  Point point;
  double parameter;
};

/// All points v on the carrier with |signed area(a, b, v)| == target_area,
/// sorted by increasing carrier parameter. For a HalfLine only parameters
/// s >= 0 are kept.
std::vector<CarrierPoint> solve_third_vertex(Point a, Point b, const Line& carrier,
                                             double target_area);
std::vector<CarrierPoint> solve_third_vertex(Point a, Point b, const HalfLine& carrier,
                                             double target_area);

/// Clips convex `subject` against convex `clip`; returns the (possibly empty
/// or degenerate) intersection loop.
std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip);

/// Ear-clipping triangulation of a simple CCW polygon.
std::vector<Polygon> triangulate(const Polygon& p);

/// Area of p ∩ q. Non-convex inputs are triangulated first.
double convex_intersection_area(const Polygon& p, const Polygon& q);

enum class IntersectionTag { Disjoint, SinglePoint, EdgeSegment, AreaOverlap };

struct IntersectionKind {
  IntersectionTag tag = IntersectionTag::Disjoint;
  bool full_edge_of_both = false;  // meaningful for EdgeSegment only
  double overlap_area = 0.0;       // meaningful for AreaOverlap only
};

IntersectionKind intersection_kind(const Polygon& p, const Polygon& q);

/// True if segment [a, b] matches one edge of p (either direction) within eps.
bool has_edge(const Polygon& p, Point a, Point b, double eps = kGeomEps);

/// Outline of the union of edge-to-edge cells: directed edges that are not
/// cancelled by a reversed twin, chained into one loop. Throws
/// Error(InvalidPolygon) if the boundary is not a single loop.
Polygon union_outline(std::span<const Polygon> cells, double eps = 1e-7);

}  // namespace equitile
