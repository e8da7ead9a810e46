#include "pwl/mapfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "pwl/scalar_expr.hpp"

namespace pwl {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

double entry_value(const json& e, std::size_t cone) {
  if (e.is_number()) return e.get<double>();
  if (e.is_string()) {
    try {
      return parse_scalar(e.get<std::string>());
    } catch (const Error& err) {
      parse_fail("cone " + std::to_string(cone) + ": " + err.what());
    }
  }
  parse_fail("cone " + std::to_string(cone) + ": matrix entries must be numbers or expressions");
}

Mat2 read_matrix(const json& cone, std::size_t i) {
  if (!cone.contains("matrix")) parse_fail("cone " + std::to_string(i) + " has no matrix");
  const json& m = cone.at("matrix");
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
      m[1].size() != 2)
    parse_fail("cone " + std::to_string(i) + ": matrix must be a 2x2 array");
  return {entry_value(m[0][0], i), entry_value(m[0][1], i), entry_value(m[1][0], i),
          entry_value(m[1][1], i)};
}

PwlMap2 build_validated(std::vector<Piece> pieces) {
  try {
    return validate(std::move(pieces));
  } catch (const Error& e) {
    throw ValidationError(e.kind(), e.what());
  }
}

[[noreturn]] void not_increasing(std::size_t i) {
  throw ValidationError(ErrorKind::GapOrOverlap,
                        "cone start angles must increase strictly (cone " + std::to_string(i) + ")");
}

}  // namespace

MapFile parse_map_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cones") || !doc["cones"].is_array())
    parse_fail("map file needs a \"cones\" array");
  const json& cones = doc["cones"];
  if (cones.empty()) parse_fail("map file has no cones");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) parse_fail("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  const std::size_t n = cones.size();
  std::vector<Mat2> matrices;
  std::vector<TurnAngle> turns;
  std::vector<double> rads;
  bool exact = true;
  for (std::size_t i = 0; i < n; ++i) {
    const json& c = cones[i];
    if (!c.is_object()) parse_fail("cone " + std::to_string(i) + " must be an object");
    matrices.push_back(read_matrix(c, i));
    if (c.contains("start_turn")) {
      if (!c["start_turn"].is_string())
        parse_fail("cone " + std::to_string(i) + ": start_turn must be a \"p/q\" string");
      try {
        turns.push_back(TurnAngle::parse(c["start_turn"].get<std::string>()));
      } catch (const Error& e) {
        parse_fail("cone " + std::to_string(i) + ": " + e.what());
      }
      rads.push_back(turns.back().radians());
    } else if (c.contains("start_rad")) {
      if (!c["start_rad"].is_number())
        parse_fail("cone " + std::to_string(i) + ": start_rad must be a number");
      const double a = c["start_rad"].get<double>();
      if (!(a >= 0.0 && a < kTwoPi))
        parse_fail("cone " + std::to_string(i) + ": start_rad must lie in [0, 2pi)");
      exact = false;
      rads.push_back(a);
    } else {
      parse_fail("cone " + std::to_string(i) + " needs start_turn or start_rad");
    }
  }

  std::vector<Piece> pieces;
  pieces.reserve(n);
  if (exact) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(turns[i] < turns[i + 1])) not_increasing(i + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const TurnSpan w = n == 1 ? TurnSpan::full() : TurnSpan::between(turns[i], turns[(i + 1) % n]);
      pieces.push_back({Sector::from_turns(turns[i], w), matrices[i]});
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(rads[i] < rads[i + 1])) not_increasing(i + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double next = i + 1 < n ? rads[i + 1] : rads[0] + kTwoPi;
      pieces.push_back({Sector::from_radians(rads[i], next - rads[i]), matrices[i]});
    }
  }
  return {std::move(name), build_validated(std::move(pieces))};
}

MapFile load_map_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_file(buf.str());
}

PwlMap2 load_map(const std::filesystem::path& path) { return load_map_file(path).map; }

std::string write_map(const PwlMap2& g, std::string_view name) {
  ordered_json doc;
  doc["name"] = std::string(name);
  ordered_json cones = ordered_json::array();
  const bool exact = g.is_exact();
  for (const auto& p : g.pieces()) {
    ordered_json c;
    if (exact)
      c["start_turn"] = p.sector.start().exact()->to_string();
    else
      c["start_rad"] = p.sector.start().angle();
    const Mat2& m = p.matrix;
    c["matrix"] = {{m.a11, m.a12}, {m.a21, m.a22}};
    cones.push_back(std::move(c));
  }
  doc["cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

}  // namespace pwl
