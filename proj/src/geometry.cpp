#include "equitile/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace equitile {

namespace {

// sin of the corner angle below which three vertices count as collinear
constexpr double kCollinearSine = 1e-12;

bool corner_is_collinear(Point a, Point b, Point c, double sine_tol) {
  const Point u = b - a;
  const Point v = c - b;
  return std::abs(cross(u, v)) <= sine_tol * norm(u) * norm(v);
}

int orient(Point a, Point b, Point c, double eps) {
  const Point u = b - a;
  const Point v = c - a;
  const double cr = cross(u, v);
  const double scale = std::max(norm(u), 1e-300);
  if (cr / scale > eps) return 1;
  if (cr / scale < -eps) return -1;
  return 0;
}

bool on_segment(Point a, Point b, Point p, double eps) {
  return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
         std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

bool segments_touch(Point a, Point b, Point c, Point d, double eps) {
  const int o1 = orient(a, b, c, eps);
  const int o2 = orient(a, b, d, eps);
  const int o3 = orient(c, d, a, eps);
  const int o4 = orient(c, d, b, eps);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c, eps)) return true;
  if (o2 == 0 && on_segment(a, b, d, eps)) return true;
  if (o3 == 0 && on_segment(c, d, a, eps)) return true;
  if (o4 == 0 && on_segment(c, d, b, eps)) return true;
  return false;
}

double loop_perimeter(std::span<const Point> loop) {
  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    total += distance(loop[i], loop[(i + 1) % loop.size()]);
  }
  return total;
}

// Shoelace area of a clip result; slivers thinner than ~1e-10 collapse to 0
// so that tiles sharing an edge report an exact zero overlap.
double clipped_area(std::span<const Point> loop) {
  if (loop.size() < 3) return 0.0;
  const double a = std::abs(loop_signed_area(loop));
  if (a <= 1e-10 * loop_perimeter(loop)) return 0.0;
  return a;
}

}  // namespace

double loop_signed_area(std::span<const Point> loop) {
  const std::size_t n = loop.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(loop[i], loop[(i + 1) % n]);
  }
  return 0.5 * twice;
}

std::optional<std::string> polygon_defect(std::span<const Point> loop) {
  const std::size_t n = loop.size();
  if (n < 3) return "fewer than 3 vertices";
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(loop[i])) return "non-finite vertex " + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(loop[i], loop[(i + 1) % n]) <= kGeomEps) {
      return "repeated vertex " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (corner_is_collinear(loop[(i + n - 1) % n], loop[i], loop[(i + 1) % n], kCollinearSine)) {
      return "collinear corner at vertex " + std::to_string(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(loop[i], loop[(i + 1) % n], loop[j], loop[(j + 1) % n], 0.0)) {
        return "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
      }
    }
  }
  if (std::abs(loop_signed_area(loop)) <= 0.0) return "zero area";
  return std::nullopt;
}

Polygon::Polygon(std::vector<Point> vertices) {
  if (auto defect = polygon_defect(vertices)) {
    throw Error(ErrorKind::InvalidPolygon, *defect);
  }
  if (loop_signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  vertices_ = std::move(vertices);
}

Polygon Polygon::trusted(std::vector<Point> ccw_vertices) {
  Polygon p;
  p.vertices_ = std::move(ccw_vertices);
  return p;
}

std::vector<Point> remove_collinear(std::vector<Point> loop) {
  bool changed = true;
  while (changed && loop.size() > 3) {
    changed = false;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = loop[(i + n - 1) % n];
      const Point b = loop[i];
      const Point c = loop[(i + 1) % n];
      const double len = norm(c - a);
      if (len > 0.0 && std::abs(cross(b - a, c - a)) / len <= kGeomEps && dot(b - a, c - b) > 0.0) {
        loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return loop;
}

double signed_area(const Polygon& p) { return loop_signed_area(p.vertices()); }

double area(const Polygon& p) { return std::abs(signed_area(p)); }

double perimeter(const Polygon& p) { return loop_perimeter(p.vertices()); }

bool is_convex(const Polygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(p.vertex(i + 1) - p.vertex(i), p.vertex(i + 2) - p.vertex(i + 1)) <= 0.0) {
      return false;
    }
  }
  return true;
}

BBox bbox(const Polygon& p) {
  BBox b{p[0], p[0]};
  for (const Point& v : p.vertices()) {
    b.lo.x = std::min(b.lo.x, v.x);
    b.lo.y = std::min(b.lo.y, v.y);
    b.hi.x = std::max(b.hi.x, v.x);
    b.hi.y = std::max(b.hi.y, v.y);
  }
  return b;
}

HalfLine::HalfLine(Point o, Point d) : origin(o), direction(d) {
  if (!is_finite(o) || !is_finite(d) || std::abs(norm(d) - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidParams, "half-line direction must be a unit vector");
  }
}

std::vector<CarrierPoint> solve_third_vertex(Point a, Point b, const Line& carrier,
                                             double target_area) {
  if (distance(a, b) <= kGeomEps) {
    throw Error(ErrorKind::InvalidParams, "solve_third_vertex needs a != b");
  }
  // area(a, b, o + s d) = base + s * slope
  const Point ab = b - a;
  const double base = 0.5 * cross(ab, carrier.origin - a);
  const double slope = 0.5 * cross(ab, carrier.direction);
  if (std::abs(slope) <= 1e-15 * norm(ab) * norm(carrier.direction)) {
    if (std::abs(std::abs(base) - target_area) <= kAreaEps * std::max(1.0, target_area)) {
      throw Error(ErrorKind::InfinitelyMany, "carrier parallel to ab at the matching distance");
    }
    throw Error(ErrorKind::NoSolution, "carrier parallel to ab");
  }
  std::vector<CarrierPoint> out;
  for (double signed_target : {-target_area, target_area}) {
    const double s = (signed_target - base) / slope;
    out.push_back({carrier.at(s), s});
    if (target_area == 0.0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const CarrierPoint& l, const CarrierPoint& r) { return l.parameter < r.parameter; });
  return out;
}

std::vector<CarrierPoint> solve_third_vertex(Point a, Point b, const HalfLine& carrier,
                                             double target_area) {
  auto all = solve_third_vertex(a, b, Line{carrier.origin, carrier.direction}, target_area);
  std::erase_if(all, [](const CarrierPoint& c) { return c.parameter < 0.0; });
  return all;
}

std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip) {
  std::vector<Point> out(subject.begin(), subject.end());
  const std::size_t m = clip.size();
  for (std::size_t j = 0; j < m && !out.empty(); ++j) {
    const Point e0 = clip[j];
    const Point e1 = clip[(j + 1) % m];
    const Point edge = e1 - e0;
    std::vector<Point> in = std::move(out);
    out.clear();
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point cur = in[i];
      const Point nxt = in[(i + 1) % n];
      const double dc = cross(edge, cur - e0);
      const double dn = cross(edge, nxt - e0);
      if (dc >= 0.0) out.push_back(cur);
      if ((dc >= 0.0) != (dn >= 0.0)) {
        const double t = dc / (dc - dn);
        out.push_back(lerp(cur, nxt, t));
      }
    }
  }
  return out;
}

std::vector<Polygon> triangulate(const Polygon& p) {
  std::vector<Point> v = p.vertices();
  std::vector<Polygon> tris;
  if (is_convex(p)) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      tris.push_back(Polygon::trusted({v[0], v[i], v[i + 1]}));
    }
    return tris;
  }
  auto inside_or_on = [](Point a, Point b, Point c, Point q) {
    return cross(b - a, q - a) >= 0.0 && cross(c - b, q - b) >= 0.0 && cross(a - c, q - c) >= 0.0;
  };
  while (v.size() > 3) {
    const std::size_t n = v.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = v[(i + n - 1) % n];
      const Point b = v[i];
      const Point c = v[(i + 1) % n];
      if (cross(b - a, c - b) <= 0.0) continue;
      bool ear = true;
      for (std::size_t k = 0; k < n && ear; ++k) {
        const Point q = v[k];
        if (q == a || q == b || q == c) continue;
        if (inside_or_on(a, b, c, q)) ear = false;
      }
      if (!ear) continue;
      tris.push_back(Polygon::trusted({a, b, c}));
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) throw Error(ErrorKind::InvalidPolygon, "ear clipping found no ear");
  }
  tris.push_back(Polygon::trusted(v));
  return tris;
}

double convex_intersection_area(const Polygon& p, const Polygon& q) {
  if (!bbox(p).overlaps(bbox(q), 0.0)) return 0.0;
  const bool pc = is_convex(p);
  const bool qc = is_convex(q);
  if (pc && qc) return clipped_area(clip_convex(p.vertices(), q.vertices()));
  const std::vector<Polygon> ps = pc ? std::vector<Polygon>{p} : triangulate(p);
  const std::vector<Polygon> qs = qc ? std::vector<Polygon>{q} : triangulate(q);
  double total = 0.0;
  for (const Polygon& a : ps) {
    for (const Polygon& b : qs) {
      total += clipped_area(clip_convex(a.vertices(), b.vertices()));
    }
  }
  return total;
}

bool has_edge(const Polygon& p, Point a, Point b, double eps) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point s = p.vertex(i);
    const Point t = p.vertex(i + 1);
    if ((distance(s, a) <= eps && distance(t, b) <= eps) ||
        (distance(s, b) <= eps && distance(t, a) <= eps)) {
      return true;
    }
  }
  return false;
}

namespace {

struct Segment {
  Point a;
  Point b;
};

// Contact between two edges: nothing, a point, or a collinear overlap.
void edge_contact(Point a, Point b, Point c, Point d, std::vector<Segment>& segments,
                  std::vector<Point>& points) {
  const double eps = kGeomEps;
  const Point u = b - a;
  const double len = norm(u);
  const Point dir = (1.0 / len) * u;
  const double dc = cross(dir, c - a);
  const double dd = cross(dir, d - a);
  if (std::abs(dc) <= eps && std::abs(dd) <= eps) {
    double t0 = dot(c - a, dir);
    double t1 = dot(d - a, dir);
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(len, t1);
    if (hi - lo > eps) {
      segments.push_back({a + lo * dir, a + hi * dir});
    } else if (hi - lo >= -eps) {
      points.push_back(a + lo * dir);
    }
    return;
  }
  if (!segments_touch(a, b, c, d, eps)) return;
  const Point v = d - c;
  const double denom = cross(u, v);
  if (std::abs(denom) <= 1e-300) {
    points.push_back(on_segment(a, b, c, eps) ? c : d);
    return;
  }
  const double t = std::clamp(cross(c - a, v) / denom, 0.0, 1.0);
  points.push_back(a + t * u);
}

// Number of maximal segments after merging contiguous collinear pieces.
std::vector<Segment> merge_segments(std::vector<Segment> segs) {
  if (segs.size() <= 1) return segs;
  const Point o = segs[0].a;
  const Point dir = (1.0 / norm(segs[0].b - segs[0].a)) * (segs[0].b - segs[0].a);
  for (const Segment& s : segs) {
    if (std::abs(cross(dir, s.a - o)) > kGeomEps || std::abs(cross(dir, s.b - o)) > kGeomEps) {
      return segs;  // not all on one line
    }
  }
  std::vector<std::pair<double, double>> iv;
  for (const Segment& s : segs) {
    double t0 = dot(s.a - o, dir);
    double t1 = dot(s.b - o, dir);
    if (t0 > t1) std::swap(t0, t1);
    iv.emplace_back(t0, t1);
  }
  std::sort(iv.begin(), iv.end());
  std::vector<Segment> merged;
  double lo = iv[0].first;
  double hi = iv[0].second;
  for (std::size_t i = 1; i < iv.size(); ++i) {
    if (iv[i].first <= hi + kGeomEps) {
      hi = std::max(hi, iv[i].second);
    } else {
      merged.push_back({o + lo * dir, o + hi * dir});
      lo = iv[i].first;
      hi = iv[i].second;
    }
  }
  merged.push_back({o + lo * dir, o + hi * dir});
  return merged;
}

}  // namespace

IntersectionKind intersection_kind(const Polygon& p, const Polygon& q) {
  IntersectionKind kind;
  if (!bbox(p).overlaps(bbox(q), kGeomEps)) return kind;
  const double overlap = convex_intersection_area(p, q);
  if (overlap > 0.0) {
    kind.tag = IntersectionTag::AreaOverlap;
    kind.overlap_area = overlap;
    return kind;
  }
  std::vector<Segment> segments;
  std::vector<Point> points;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      edge_contact(p.vertex(i), p.vertex(i + 1), q.vertex(j), q.vertex(j + 1), segments, points);
    }
  }
  if (!segments.empty()) {
    const std::vector<Segment> merged = merge_segments(std::move(segments));
    kind.tag = IntersectionTag::EdgeSegment;
    kind.full_edge_of_both = merged.size() == 1 && has_edge(p, merged[0].a, merged[0].b) &&
                             has_edge(q, merged[0].a, merged[0].b);
    return kind;
  }
  if (!points.empty()) kind.tag = IntersectionTag::SinglePoint;
  return kind;
}

Polygon union_outline(std::span<const Polygon> cells, double eps) {
  struct Edge {
    Point a;
    Point b;
  };
  std::vector<Edge> edges;
  for (const Polygon& c : cells) {
    for (std::size_t i = 0; i < c.size(); ++i) edges.push_back({c.vertex(i), c.vertex(i + 1)});
  }
  auto same = [eps](Point u, Point v) { return distance(u, v) <= eps; };
  std::vector<Edge> boundary;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool cancelled = false;
    for (std::size_t j = 0; j < edges.size() && !cancelled; ++j) {
      cancelled = j != i && same(edges[i].a, edges[j].b) && same(edges[i].b, edges[j].a);
    }
    if (!cancelled) boundary.push_back(edges[i]);
  }
  if (boundary.empty()) throw Error(ErrorKind::InvalidPolygon, "union has no boundary");
  std::vector<Point> loop{boundary[0].a};
  std::vector<bool> used(boundary.size(), false);
  used[0] = true;
  Point cur = boundary[0].b;
  std::size_t used_count = 1;
  while (!same(cur, loop.front())) {
    bool found = false;
    for (std::size_t j = 0; j < boundary.size(); ++j) {
      if (!used[j] && same(boundary[j].a, cur)) {
        loop.push_back(boundary[j].a);
        cur = boundary[j].b;
        used[j] = true;
        ++used_count;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidPolygon, "union boundary is not closed");
  }
  if (used_count != boundary.size()) {
    throw Error(ErrorKind::InvalidPolygon, "union boundary has more than one loop");
  }
  return Polygon(remove_collinear(std::move(loop)));
}

}  // namespace equitile
