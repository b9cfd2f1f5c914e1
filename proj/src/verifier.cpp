#include "equitile/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>

#include "equitile/signature.hpp"

namespace equitile {

namespace {

constexpr std::array<std::pair<CheckKind, const char*>, 7> kCheckNames{{
    {CheckKind::UnitArea, "unit-area"},
    {CheckKind::Noncongruent, "noncongruent"},
    {CheckKind::Perimeter, "perimeter"},
    {CheckKind::Convex, "convex"},
    {CheckKind::Coverage, "coverage"},
    {CheckKind::Vtv, "vtv"},
    {CheckKind::Normality, "normality"},
}};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Runs body(begin, end, worker) over [0, n) in contiguous chunks.
template <class Body>
void parallel_chunks(std::size_t n, int threads, Body body) {
  const std::size_t t = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, std::max<std::size_t>(n, 1));
  if (t == 1) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < t; ++w) {
    pool.emplace_back([=, &body] { body(n * w / t, n * (w + 1) / t, w); });
  }
  for (std::thread& th : pool) th.join();
}

// Worst pair under a score; ties go to the lexicographically smaller pair
// so the result does not depend on thread scheduling or tile order.
struct PairWitness {
  bool found = false;
  std::size_t i = 0;
  std::size_t j = 0;
  double score = 0.0;

  void offer(std::size_t a, std::size_t b, double s, bool higher_is_worse) {
    if (a > b) std::swap(a, b);
    const bool better = !found || (higher_is_worse ? s > score : s < score) ||
                        (s == score && std::pair(a, b) < std::pair(i, j));
    if (better) *this = {true, a, b, s};
  }
  void merge(const PairWitness& o, bool higher_is_worse) {
    if (o.found) offer(o.i, o.j, o.score, higher_is_worse);
  }
};

// Candidate pairs whose bounding boxes touch, enumerated by a sweep on x.
template <class Visit>
std::vector<PairWitness> sweep_pairs(const std::vector<Polygon>& tiles, int threads,
                                     Visit visit) {
  std::vector<BBox> boxes;
  boxes.reserve(tiles.size());
  for (const Polygon& t : tiles) boxes.push_back(bbox(t));
  std::vector<std::size_t> order(tiles.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(boxes[a].lo.x, a) < std::pair(boxes[b].lo.x, b);
  });
  const int t = std::max(1, threads);
  std::vector<PairWitness> partial(static_cast<std::size_t>(t));
  parallel_chunks(order.size(), t, [&](std::size_t lo, std::size_t hi, std::size_t w) {
    for (std::size_t a = lo; a < hi; ++a) {
      const std::size_t i = order[a];
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        const std::size_t j = order[b];
        if (boxes[j].lo.x > boxes[i].hi.x + kGeomEps) break;
        if (!boxes[i].overlaps(boxes[j], kGeomEps)) continue;
        visit(i, j, partial[w]);
      }
    }
  });
  return partial;
}

CheckResult blank(CheckKind kind) {
  CheckResult r;
  r.kind = kind;
  return r;
}

CheckResult fail_with(CheckKind kind, std::string message, std::vector<std::size_t> tiles,
                      double residual) {
  CheckResult r = blank(kind);
  r.passed = false;
  r.message = std::move(message);
  r.tiles = std::move(tiles);
  r.residual = residual;
  return r;
}

}  // namespace

std::string to_string(CheckKind k) {
  for (const auto& [kind, name] : kCheckNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<CheckKind> parse_check(const std::string& name) {
  for (const auto& [kind, n] : kCheckNames) {
    if (name == n) return kind;
  }
  return std::nullopt;
}

bool VerificationReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

CheckResult check_unit_area(const std::vector<Polygon>& tiles, double target, double tol,
                            int threads) {
  std::vector<double> dev(tiles.size());
  parallel_chunks(tiles.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t k = lo; k < hi; ++k) dev[k] = std::abs(area(tiles[k]) - target);
  });
  CheckResult r = blank(CheckKind::UnitArea);
  if (tiles.empty()) return r;
  const std::size_t worst = static_cast<std::size_t>(std::max_element(dev.begin(), dev.end()) - dev.begin());
  r.tiles = {worst};
  r.residual = dev[worst];
  r.passed = dev[worst] <= tol;
  r.message = fmt("max |area - target| = %.3g", dev[worst]);
  return r;
}

CheckResult check_noncongruence(const std::vector<Polygon>& tiles, double delta, int threads) {
  struct Item {
    std::size_t tile;
    double perimeter;
  };
  std::vector<CongruenceSignature> sigs(tiles.size());
  parallel_chunks(tiles.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t k = lo; k < hi; ++k) sigs[k] = congruence_signature(tiles[k]);
  });
  // groups by vertex count, sorted by perimeter: distance >= |ΔP| / n
  std::map<std::size_t, std::vector<Item>> groups;
  for (std::size_t k = 0; k < tiles.size(); ++k) groups[tiles[k].size()].push_back({k, perimeter(tiles[k])});
  PairWitness best;
  for (auto& [n, items] : groups) {
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return std::pair(a.perimeter, a.tile) < std::pair(b.perimeter, b.tile);
    });
    const int t = std::max(1, threads);
    std::vector<PairWitness> partial(static_cast<std::size_t>(t));
    parallel_chunks(items.size(), t, [&](std::size_t lo, std::size_t hi, std::size_t w) {
      PairWitness& local = partial[w];
      for (std::size_t a = lo; a < hi; ++a) {
        for (std::size_t b = a + 1; b < items.size(); ++b) {
          const double bound = (items[b].perimeter - items[a].perimeter) / static_cast<double>(n);
          if (local.found && bound > local.score) break;
          const double d = signature_distance(sigs[items[a].tile], sigs[items[b].tile]);
          local.offer(items[a].tile, items[b].tile, d, false);
        }
      }
    });
    for (const PairWitness& p : partial) best.merge(p, false);
  }
  CheckResult r = blank(CheckKind::Noncongruent);
  if (!best.found) return r;
  r.tiles = {best.i, best.j};
  r.residual = best.score;
  r.passed = best.score > delta;
  r.message = fmt("closest pair distance %.3g (delta %.3g)", best.score, delta);
  return r;
}

CheckResult check_perimeter_bound(const std::vector<Polygon>& tiles, double c) {
  CheckResult r = blank(CheckKind::Perimeter);
  double worst = -1.0;
  for (std::size_t k = 0; k < tiles.size(); ++k) {
    const double p = perimeter(tiles[k]);
    if (p > worst) {
      worst = p;
      r.tiles = {k};
    }
  }
  r.residual = std::max(worst, 0.0);
  r.passed = worst <= c;
  r.message = fmt("max perimeter %.6g (bound %.6g)", r.residual, c);
  return r;
}

CheckResult check_convexity(const std::vector<Polygon>& tiles) {
  for (std::size_t k = 0; k < tiles.size(); ++k) {
    if (!is_convex(tiles[k])) {
      return fail_with(CheckKind::Convex, "tile " + std::to_string(k) + " is not convex", {k},
                       1.0);
    }
  }
  return blank(CheckKind::Convex);
}

CheckResult check_packing_coverage(const std::vector<Polygon>& tiles, const Polygon& window,
                                   double rel_tol, int threads) {
  constexpr double kOverlapTol = 1e-12;
  const auto partial = sweep_pairs(tiles, threads, [&](std::size_t i, std::size_t j, PairWitness& w) {
    const double a = convex_intersection_area(tiles[i], tiles[j]);
    if (a >= kOverlapTol) w.offer(i, j, a, true);
  });
  PairWitness overlap;
  for (const PairWitness& p : partial) overlap.merge(p, true);
  if (overlap.found) {
    return fail_with(CheckKind::Coverage, fmt("tiles overlap with area %.3g", overlap.score),
                     {overlap.i, overlap.j}, overlap.score);
  }

  const std::vector<Polygon> pieces =
      is_convex(window) ? std::vector<Polygon>{window} : triangulate(window);
  const BBox wb = bbox(window);
  std::vector<double> covered(tiles.size(), 0.0);
  parallel_chunks(tiles.size(), threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t k = lo; k < hi; ++k) {
      if (!bbox(tiles[k]).overlaps(wb, kGeomEps)) continue;
      for (const Polygon& piece : pieces) covered[k] += convex_intersection_area(tiles[k], piece);
    }
  });
  double sum = 0.0;
  for (double c : covered) sum += c;  // fixed order keeps the sum reproducible
  const double target = area(window);
  const double deficit = target - sum;
  CheckResult r = blank(CheckKind::Coverage);
  r.residual = std::abs(deficit);
  r.passed = r.residual <= rel_tol * target;
  r.message = fmt("covered %.12g of window area %.12g", sum, target);
  return r;
}

CheckResult check_vtv(const std::vector<Polygon>& tiles, int threads) {
  // equal scores: the tie-break keeps the lexicographically first violation
  const auto partial = sweep_pairs(tiles, threads, [&](std::size_t i, std::size_t j, PairWitness& w) {
    const IntersectionKind k = intersection_kind(tiles[i], tiles[j]);
    const bool ok = k.tag == IntersectionTag::Disjoint || k.tag == IntersectionTag::SinglePoint ||
                    (k.tag == IntersectionTag::EdgeSegment && k.full_edge_of_both);
    if (!ok) w.offer(i, j, 0.0, true);
  });
  PairWitness first;
  for (const PairWitness& p : partial) first.merge(p, true);
  if (!first.found) return blank(CheckKind::Vtv);
  const IntersectionKind k = intersection_kind(tiles[first.i], tiles[first.j]);
  const char* what = k.tag == IntersectionTag::AreaOverlap ? "overlap" : "partial edge contact";
  return fail_with(CheckKind::Vtv,
                   "tiles " + std::to_string(first.i) + " and " + std::to_string(first.j) +
                       " meet in a " + what,
                   {first.i, first.j}, k.tag == IntersectionTag::AreaOverlap ? k.overlap_area : 1.0);
}

}  // namespace equitile

namespace equitile {

std::pair<double, Point> inradius(const Polygon& p) {
  // The centre of the largest inscribed disc is equidistant from (at least)
  // three edge lines; try every triple and keep the best feasible one.
  const std::size_t n = p.size();
  std::vector<Point> normal(n);
  std::vector<double> offset(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point e = p.vertex(i + 1) - p.vertex(i);
    normal[i] = (1.0 / norm(e)) * perp(e);  // inward for CCW loops
    offset[i] = dot(normal[i], p.vertex(i));
  }
  double best = 0.0;
  Point centre = p.vertex(0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        // n_k · x - r = offset_k for k in {a, b, c}
        const double m[3][3] = {{normal[a].x, normal[a].y, -1.0},
                                {normal[b].x, normal[b].y, -1.0},
                                {normal[c].x, normal[c].y, -1.0}};
        const double rhs[3] = {offset[a], offset[b], offset[c]};
        const auto det3 = [](const double x[3][3]) {
          return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
                 x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
                 x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
        };
        const double d = det3(m);
        if (std::abs(d) < 1e-14) continue;
        double sol[3];
        for (int col = 0; col < 3; ++col) {
          double t[3][3];
          for (int r = 0; r < 3; ++r) {
            for (int k = 0; k < 3; ++k) t[r][k] = k == col ? rhs[r] : m[r][k];
          }
          sol[col] = det3(t) / d;
        }
        const Point x{sol[0], sol[1]};
        const double r = sol[2];
        if (r <= best) continue;
        bool feasible = true;
        for (std::size_t k = 0; k < n && feasible; ++k) {
          feasible = dot(normal[k], x) - offset[k] >= r - 1e-12;
        }
        if (feasible) {
          best = r;
          centre = x;
        }
      }
    }
  }
  return {best, centre};
}

std::pair<double, Point> circumradius(const Polygon& p) {
  const std::vector<Point>& v = p.vertices();
  double best = kSignatureInfinity;
  Point centre = v[0];
  const auto consider = [&](Point c, double r) {
    if (r >= best) return;
    for (const Point& q : v) {
      if (distance(q, c) > r * (1.0 + 1e-12) + 1e-12) return;
    }
    best = r;
    centre = c;
  };
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      consider(0.5 * (v[a] + v[b]), 0.5 * distance(v[a], v[b]));
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        const Point ab = v[b] - v[a];
        const Point ac = v[c] - v[a];
        const double d = 2.0 * cross(ab, ac);
        if (std::abs(d) < 1e-14) continue;
        const Point o{(ac.y * dot(ab, ab) - ab.y * dot(ac, ac)) / d,
                      (ab.x * dot(ac, ac) - ac.x * dot(ab, ab)) / d};
        consider(v[a] + o, norm(o));
      }
    }
  }
  return {best, centre};
}

CheckResult check_normality_radii(const std::vector<Polygon>& tiles) {
  CheckResult r = blank(CheckKind::Normality);
  if (tiles.empty()) return r;
  r.inradius_min = kSignatureInfinity;
  std::size_t thinnest = 0;
  for (std::size_t k = 0; k < tiles.size(); ++k) {
    if (!is_convex(tiles[k])) {
      return fail_with(CheckKind::Normality, "radii need convex tiles", {k}, 0.0);
    }
    const double in = inradius(tiles[k]).first;
    const double out = circumradius(tiles[k]).first;
    if (in < r.inradius_min) {
      r.inradius_min = in;
      thinnest = k;
    }
    r.circumradius_max = std::max(r.circumradius_max, out);
  }
  r.tiles = {thinnest};
  r.residual = r.inradius_min;
  r.passed = r.inradius_min > 0.0;
  r.message = fmt("r = %.6g, R = %.6g", r.inradius_min, r.circumradius_max);
  return r;
}

VerificationReport verify(const std::vector<Polygon>& tiles, const CheckSpec& spec) {
  if (spec.checks.empty()) throw Error(ErrorKind::InvalidParams, "no checks requested");
  VerificationReport report;
  for (CheckKind kind : spec.checks) {
    switch (kind) {
      case CheckKind::UnitArea:
        report.results.push_back(check_unit_area(tiles, spec.target_area, spec.tolerance, spec.threads));
        break;
      case CheckKind::Noncongruent:
        report.results.push_back(check_noncongruence(tiles, spec.delta, spec.threads));
        break;
      case CheckKind::Perimeter:
        if (spec.perimeter_bound <= 0.0) {
          throw Error(ErrorKind::InvalidParams, "perimeter check needs a bound c > 0");
        }
        report.results.push_back(check_perimeter_bound(tiles, spec.perimeter_bound));
        break;
      case CheckKind::Convex:
        report.results.push_back(check_convexity(tiles));
        break;
      case CheckKind::Coverage:
        if (!spec.window) throw Error(ErrorKind::InvalidParams, "coverage check needs a window");
        report.results.push_back(
            check_packing_coverage(tiles, *spec.window, spec.coverage_tolerance, spec.threads));
        break;
      case CheckKind::Vtv:
        report.results.push_back(check_vtv(tiles, spec.threads));
        break;
      case CheckKind::Normality:
        report.results.push_back(check_normality_radii(tiles));
        break;
    }
  }
  return report;
}

VerificationReport verify(const Patch& patch, CheckSpec spec) {
  if (!spec.window) spec.window = patch.region;
  return verify(patch.tiles, spec);
}

}  // namespace equitile
