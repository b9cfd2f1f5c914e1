#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equitile/constructions.hpp"
#include "equitile/geometry.hpp"

namespace equitile {

enum class CheckKind { UnitArea, Noncongruent, Perimeter, Convex, Coverage, Vtv, Normality };

std::string to_string(CheckKind k);
/// Parses "unit-area", "noncongruent", ...; nullopt if unknown.
std::optional<CheckKind> parse_check(const std::string& name);

struct CheckSpec {
  std::vector<CheckKind> checks;
  double target_area = 1.0;
  double tolerance = 1e-9;       // absolute, for per-tile areas
  double delta = 1e-6;           // congruence threshold
  double perimeter_bound = 0.0;  // c; <= 0 means not set
  std::optional<Polygon> window; // coverage region; falls back to the patch region
  double coverage_tolerance = 1e-6;  // relative
  int threads = 1;
};

/// Failed check with the worst offender. `tiles` holds one index for
/// per-tile checks and two for pairwise ones.
struct CheckResult {
  CheckKind kind = CheckKind::UnitArea;
  bool passed = true;
  std::string message;
  std::vector<std::size_t> tiles;
  double residual = 0.0;
  double inradius_min = 0.0;        // normality only
  double circumradius_max = 0.0;    // normality only
};

struct VerificationReport {
  std::vector<CheckResult> results;
  bool passed() const;
};

CheckResult check_unit_area(const std::vector<Polygon>& tiles, double target, double tol,
                            int threads = 1);
CheckResult check_noncongruence(const std::vector<Polygon>& tiles, double delta, int threads = 1);
CheckResult check_perimeter_bound(const std::vector<Polygon>& tiles, double c);
CheckResult check_convexity(const std::vector<Polygon>& tiles);

/// Tiles must not overlap and must cover `window` up to a relative area
/// tolerance. Tiles reaching outside the window are fine.
CheckResult check_packing_coverage(const std::vector<Polygon>& tiles, const Polygon& window,
                                   double rel_tol = 1e-6, int threads = 1);

/// Every pair of tiles meets in nothing, a point, or a full common edge.
CheckResult check_vtv(const std::vector<Polygon>& tiles, int threads = 1);

/// Largest inscribed disc of a convex polygon (radius, centre).
std::pair<double, Point> inradius(const Polygon& p);
/// Smallest enclosing disc (radius, centre).
std::pair<double, Point> circumradius(const Polygon& p);

/// Reports r = min inradius and R = max circumradius over the tiles. Only
/// fails on non-convex tiles or r <= 0; a finite patch says nothing about
/// uniform bounds in the limit.
CheckResult check_normality_radii(const std::vector<Polygon>& tiles);

VerificationReport verify(const std::vector<Polygon>& tiles, const CheckSpec& spec);
VerificationReport verify(const Patch& patch, CheckSpec spec);

}  // namespace equitile
