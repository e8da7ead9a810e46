#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pwl/errors.hpp"
#include "pwl/pwlmap.hpp"

namespace pwl {

// Map files are JSON:
//
//   {"name": "pie5",
//    "cones": [{"start_turn": "3/16", "matrix": [[1, "-sqrt(2)"], [0, "sqrt(2)-1"]]}, ...]}
//
// Cone i spans [start_i, start_{i+1}) with wraparound, so starts must be
// strictly increasing in [0, 1). Matrix entries are numbers or scalar
// expressions. Computed maps with irrational boundaries use "start_rad"
// (radians in [0, 2pi)) instead of "start_turn".

// A map file that parsed but does not describe a valid map. kind() is the
// underlying validation error (GapOrOverlap, DiscontinuousBoundary, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct MapFile {
  std::string name;
  PwlMap2 map;
};

// Throws Error{ParseError} or ValidationError.
MapFile parse_map_file(std::string_view json_text);
// Also throws Error{IoError} when the file cannot be read.
MapFile load_map_file(const std::filesystem::path& path);
PwlMap2 load_map(const std::filesystem::path& path);

// Exact maps are written with start_turn, others with start_rad.
std::string write_map(const PwlMap2& g, std::string_view name);

}  // namespace pwl
