#include "equitile/patch_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace equitile {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void append_loop(std::string& out, const std::vector<Point>& loop) {
  out += '[';
  for (std::size_t k = 0; k < loop.size(); ++k) {
    if (k) out += ',';
    out += '[' + num(loop[k].x) + ',' + num(loop[k].y) + ']';
  }
  out += ']';
}

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::FormatError, what);
}

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) format_error(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) format_error(where + ": unknown field '" + key + "'");
  }
  for (const std::string& key : allowed) {
    if (!obj.contains(key)) format_error(where + ": missing field '" + key + "'");
  }
}

std::vector<Point> parse_loop(const json& v, const std::string& where) {
  if (!v.is_array()) format_error(where + ": expected a vertex list");
  std::vector<Point> loop;
  for (const json& p : v) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      format_error(where + ": vertices must be [x, y] number pairs");
    }
    loop.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return loop;
}

Polygon parse_polygon(const json& v, const std::string& where) {
  std::vector<Point> loop = parse_loop(v, where);
  if (auto defect = polygon_defect(loop)) format_error(where + ": " + *defect);
  try {
    return Polygon(std::move(loop));
  } catch (const Error& e) {
    format_error(where + ": " + e.what());
  }
}

}  // namespace

std::string patch_to_json(const Patch& patch) {
  std::string out = "{\"format_version\":1,\"construction\":" + quoted(patch.construction);
  out += ",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : patch.params) {
    if (!first) out += ',';
    first = false;
    out += quoted(key) + ':' + num(value);
  }
  out += "},\"seed\":" + std::to_string(patch.seed) + ",\"region\":";
  if (patch.region) {
    append_loop(out, patch.region->vertices());
  } else {
    out += "null";
  }
  out += ",\"tiles\":[";
  for (std::size_t k = 0; k < patch.tiles.size(); ++k) {
    out += k ? ",\n" : "\n";
    out += "{\"id\":" + std::to_string(k) + ",\"vertices\":";
    append_loop(out, patch.tiles[k].vertices());
    out += '}';
  }
  out += "\n]}\n";
  return out;
}

Patch patch_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format_version")) {
    format_error("missing field 'format_version'");
  }
  const json& version = doc["format_version"];
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    format_error("unsupported format_version " + version.dump());
  }
  require_keys(doc, {"format_version", "construction", "params", "seed", "region", "tiles"},
               "patch");

  Patch patch;
  if (!doc["construction"].is_string()) format_error("construction: expected a string");
  patch.construction = doc["construction"].get<std::string>();
  if (!doc["params"].is_object()) format_error("params: expected an object");
  for (const auto& [key, value] : doc["params"].items()) {
    if (!value.is_number()) format_error("params." + key + ": expected a number");
    patch.params[key] = value.get<double>();
  }
  if (!doc["seed"].is_number_unsigned()) format_error("seed: expected a non-negative integer");
  patch.seed = doc["seed"].get<std::uint64_t>();
  if (!doc["region"].is_null()) patch.region = parse_polygon(doc["region"], "region");

  if (!doc["tiles"].is_array()) format_error("tiles: expected an array");
  std::size_t expected_id = 0;
  for (const json& tile : doc["tiles"]) {
    const std::string where = "tile " + std::to_string(expected_id);
    require_keys(tile, {"id", "vertices"}, where);
    if (!tile["id"].is_number_unsigned() || tile["id"].get<std::size_t>() != expected_id) {
      format_error(where + ": ids must be dense from 0, got " + tile["id"].dump());
    }
    patch.tiles.push_back(parse_polygon(tile["vertices"], where));
    ++expected_id;
  }
  return patch;
}

void write_patch(const Patch& patch, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << patch_to_json(patch);
  if (!out) throw Error(ErrorKind::IoError, "write to " + path + " failed");
}

Patch read_patch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return patch_from_json(buf.str());
}

}  // namespace equitile
