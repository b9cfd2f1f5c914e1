#include <algorithm>
#include <cmath>
#include <cstdio>

#include "equitile/patch_io.hpp"
#include "equitile/signature.hpp"

namespace equitile {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Golden-angle walk over a congruence invariant: distinct shapes get
// visibly distinct hues, the same shape always the same one.
int hue_for(const Polygon& tile, bool by_class) {
  constexpr double kGolden = 0.6180339887498949;
  double key = static_cast<double>(tile.size());
  if (!by_class) {
    for (const SignatureEntry& e : congruence_signature(tile).sequence) {
      key = key * 7.0 + e.edge_length * 13.0 + e.interior_angle;
    }
  }
  const double frac = key * kGolden - std::floor(key * kGolden);
  return static_cast<int>(std::lround(frac * 359.0));
}

}  // namespace

std::string render_svg(const Patch& patch, const SvgOptions& options) {
  if (patch.tiles.empty()) throw Error(ErrorKind::InvalidParams, "cannot render an empty patch");
  BBox box = bbox(patch.tiles.front());
  for (const Polygon& t : patch.tiles) {
    const BBox b = bbox(t);
    box.lo = {std::min(box.lo.x, b.lo.x), std::min(box.lo.y, b.lo.y)};
    box.hi = {std::max(box.hi.x, b.hi.x), std::max(box.hi.y, b.hi.y)};
  }
  if (options.window) box = *options.window;
  const double w = box.hi.x - box.lo.x;
  const double h = box.hi.y - box.lo.y;
  const double margin = 0.02 * std::max(w, h);
  const double stroke = options.stroke_width > 0.0 ? options.stroke_width : 0.002 * std::max(w, h);

  // y is flipped so the picture has the usual mathematical orientation
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         num(box.lo.x - margin) + ' ' + num(-box.hi.y - margin) + ' ' + num(w + 2 * margin) +
         ' ' + num(h + 2 * margin) + "\">\n";
  out += "<g stroke=\"#222\" stroke-width=\"" + num(stroke) + "\" stroke-linejoin=\"round\">\n";
  for (std::size_t k = 0; k < patch.tiles.size(); ++k) {
    const Polygon& t = patch.tiles[k];
    out += "<polygon id=\"t" + std::to_string(k) + "\" fill=\"hsl(" +
           std::to_string(hue_for(t, options.color_by_class)) + ",60%,70%)\" points=\"";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ' ';
      out += num(t[i].x) + ',' + num(0.0 - t[i].y);
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace equitile
