// equitile: generate, verify and render patches of unit-area tilings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equitile/constructions.hpp"
#include "equitile/patch_io.hpp"
#include "equitile/verifier.hpp"

namespace {

using namespace equitile;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct GenerateArgs {
  std::string construction;
  int count = -1;
  int rings = 1;
  int strips = -1;
  int cells = 5;
  double c = 100.0;
  std::uint64_t seed = 42;
  std::string out;
  double x0 = 2.0;
  double q = 1.4142135623730951;
  double tile_area = 1.0;
  double stretch = 1.05;
};

struct VerifyArgs {
  std::string path;
  std::string checks = "unit-area,noncongruent,convex";
  double target = 1.0;
  double tol = 1e-9;
  double delta = 1e-6;
  double c = 0.0;
  std::string window;
  int threads = 1;
};

struct RenderArgs {
  std::string path;
  std::string svg;
  std::string window;
  bool color_by_class = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

BBox parse_window(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 4) throw CLI::ValidationError("--window", "expected x0,y0,x1,y1");
  double v[4];
  for (int k = 0; k < 4; ++k) {
    try {
      v[k] = std::stod(parts[k]);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--window", "not a number: " + parts[k]);
    }
  }
  if (!(v[2] > v[0] && v[3] > v[1])) throw CLI::ValidationError("--window", "empty window");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

Polygon window_polygon(const BBox& b) {
  return Polygon({b.lo, {b.hi.x, b.lo.y}, b.hi, {b.lo.x, b.hi.y}});
}

Patch generate(const GenerateArgs& a) {
  const std::string& k = a.construction;
  if (k == "halfstrip") {
    const int strips = a.strips > 0 ? a.strips : 3;
    std::vector<double> widths;
    for (int i = 0; i < strips; ++i) widths.push_back(1.0 + 0.4 * i / strips);
    return halfstrip_patch(widths, a.count > 0 ? a.count : 30);
  }
  if (k == "zigzag") return zigzag_quadrant(a.x0, a.count > 0 ? a.count : 30, a.tile_area);
  if (k == "zigzag-plane") {
    return zigzag_plane(a.x0, a.count > 0 ? a.count : 30, a.q, a.tile_area);
  }
  if (k == "bounded-triangles") {
    BoundedTriangleOptions opt;
    opt.c = a.c;
    opt.x0 = a.x0;
    opt.count = a.count > 0 ? a.count : 500;
    opt.seed = a.seed;
    ShapeRegistry registry;
    return bounded_triangle_quadrant(opt, registry);
  }
  if (k == "bounded-triangles-plane") {
    return bounded_triangle_plane(a.c, a.count > 0 ? a.count : 500, a.seed, a.x0);
  }
  if (k == "quad") return quad_patch_nonvtv(a.rings, a.seed);
  if (k == "quad-vtv") return quad_patch_vtv(a.rings, a.seed);
  if (k == "pentagon") return pentagon_patch(a.rings, a.seed);
  if (k == "hex14") return hexagon_patch_vtv(a.strips > 0 ? a.strips : 2, a.cells, a.seed, a.stretch);
  throw CLI::ValidationError("--construction", "unknown construction " + k);
}

int run_verify(const VerifyArgs& a) {
  const Patch patch = read_patch(a.path);
  CheckSpec spec;
  for (const std::string& name : split(a.checks, ',')) {
    const auto kind = parse_check(name);
    if (!kind) throw CLI::ValidationError("--checks", "unknown check " + name);
    spec.checks.push_back(*kind);
  }
  spec.target_area = a.target;
  spec.tolerance = a.tol;
  spec.delta = a.delta;
  spec.perimeter_bound = a.c;
  spec.threads = a.threads;
  if (!a.window.empty()) spec.window = window_polygon(parse_window(a.window));
  const VerificationReport report = verify(patch, spec);
  for (const CheckResult& r : report.results) {
    std::printf("%-12s %s  %s", to_string(r.kind).c_str(), r.passed ? "PASS" : "FAIL",
                r.message.c_str());
    if (!r.passed && !r.tiles.empty()) {
      std::printf("  [tiles");
      for (std::size_t t : r.tiles) std::printf(" %zu", t);
      std::printf("]");
    }
    std::printf("\n");
  }
  return report.passed() ? kOk : kViolation;
}

int run_render(const RenderArgs& a) {
  const Patch patch = read_patch(a.path);
  SvgOptions opt;
  if (!a.window.empty()) opt.window = parse_window(a.window);
  opt.color_by_class = a.color_by_class;
  std::ofstream out(a.svg, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + a.svg + " for writing");
  out << render_svg(patch, opt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilings by pairwise non-congruent convex polygons of unit area"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "Build a patch and write it as JSON");
  g->add_option("--construction", gen.construction)
      ->required()
      ->check(CLI::IsMember({"halfstrip", "zigzag", "zigzag-plane", "bounded-triangles",
                             "bounded-triangles-plane", "quad", "quad-vtv", "pentagon", "hex14"}));
  g->add_option("--count", gen.count, "Triangles (per strip or quadrant)");
  g->add_option("--rings", gen.rings, "Rings around the centre cell")->check(CLI::NonNegativeNumber);
  g->add_option("--strips", gen.strips, "Strips (halfstrip, hex14)");
  g->add_option("--cells", gen.cells, "14-gon clusters per strip")->check(CLI::PositiveNumber);
  g->add_option("--c", gen.c, "Perimeter cap for bounded triangles");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out)->required();
  g->add_option("--x0", gen.x0, "First zigzag base length");
  g->add_option("--q", gen.q, "Quadrant scale factor (zigzag-plane)");
  g->add_option("--area", gen.tile_area, "Tile area (zigzag)");
  g->add_option("--sigma", gen.stretch, "Stretch of the 14-gon's fourth hexagon");

  VerifyArgs ver;
  CLI::App* v = app.add_subcommand("verify", "Check properties of a patch file");
  v->add_option("path", ver.path)->required();
  v->add_option("--checks", ver.checks,
                "Comma list of unit-area,noncongruent,perimeter,convex,coverage,vtv,normality");
  v->add_option("--target", ver.target);
  v->add_option("--tol", ver.tol);
  v->add_option("--delta", ver.delta);
  v->add_option("--c", ver.c);
  v->add_option("--window", ver.window, "x0,y0,x1,y1 (default: the patch region)");
  v->add_option("--threads", ver.threads)->check(CLI::PositiveNumber);

  RenderArgs ren;
  CLI::App* r = app.add_subcommand("render", "Draw a patch file as SVG");
  r->add_option("path", ren.path)->required();
  r->add_option("--svg", ren.svg)->required();
  r->add_option("--window", ren.window, "x0,y0,x1,y1");
  r->add_flag("--color-by-class", ren.color_by_class);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) {
      write_patch(generate(gen), gen.out);
      return kOk;
    }
    if (*v) return run_verify(ver);
    return run_render(ren);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  }
}
