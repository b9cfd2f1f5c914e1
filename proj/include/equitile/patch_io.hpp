#pragma once

#include <optional>
#include <string>

#include "equitile/constructions.hpp"

namespace equitile {

/// Serialises a patch as format_version 1 JSON. Numbers are printed with
/// 17 significant digits so a round trip is exact and output is stable.
std::string patch_to_json(const Patch& patch);

/// Parses format_version 1 JSON. Throws Error(FormatError) on unknown
/// fields, other versions, or invalid tiles (the message names the tile id).
Patch patch_from_json(const std::string& text);

void write_patch(const Patch& patch, const std::string& path);
Patch read_patch(const std::string& path);

struct SvgOptions {
  std::optional<BBox> window;   // default: bounding box of all tiles
  bool color_by_class = false;  // colour by vertex count instead of shape
  double stroke_width = 0.0;    // 0: 0.2% of the view size
};

/// One <polygon> per tile; the viewBox gets a 2% margin.
std::string render_svg(const Patch& patch, const SvgOptions& options = {});

}  // namespace equitile
