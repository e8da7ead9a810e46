#include "pwl/builtin_examples.hpp"

#include <array>
#include <string>

#include "pwl/errors.hpp"

namespace pwl {
namespace {

// Five convex cones, all determinants positive, degree 2.
constexpr std::string_view kPie5 = R"json({
  "name": "pie5",
  "cones": [
    {"start_turn": "0/1",  "matrix": [[1, "-sqrt(2)"], [0, "sqrt(2)-1"]]},
    {"start_turn": "3/16", "matrix": [["-sqrt(2)", "-sqrt(2)+1"], [1, 0]]},
    {"start_turn": "3/8",  "matrix": [[0, 1], ["-sqrt(2)+1", "-sqrt(2)"]]},
    {"start_turn": "9/16", "matrix": [["sqrt(2)-1", 0], ["-sqrt(2)", 1]]},
    {"start_turn": "3/4",  "matrix": [[1, 0], [0, 1]]}
  ]
}
)json";

// Four cones, the third one wider than a half-plane; degree 2.
constexpr std::string_view kPie4Nonconvex = R"json({
  "name": "pie4-nonconvex",
  "cones": [
    {"start_turn": "0/1",   "matrix": [[1, 0], [0, 1]]},
    {"start_turn": "1/4",   "matrix": [[1, 0], ["2*sqrt(3)", 1]]},
    {"start_turn": "1/3",   "matrix": [[-2, "-sqrt(3)"], ["-sqrt(3)", -2]]},
    {"start_turn": "11/12", "matrix": [[1, "2*sqrt(3)"], [0, 1]]}
  ]
}
)json";

// Four convex cones, degree 1, yet the convex hull of the pieces contains
// singular matrices. Cone boundaries are the rays where neighbouring
// matrices agree: 0, pi/2, 5pi/4, 7pi/4.
constexpr std::string_view kClarke4 = R"json({
  "name": "clarke4",
  "cones": [
    {"start_turn": "0/1", "matrix": [[1, 0], [0, 1]]},
    {"start_turn": "1/4", "matrix": [["1/10", 0], [-10, 1]]},
    {"start_turn": "5/8", "matrix": [["5/100", "5/100"], ["-455/100", "-445/100"]]},
    {"start_turn": "7/8", "matrix": [[1, 1], [0, "1/10"]]}
  ]
}
)json";

constexpr std::array<std::string_view, 3> kNames = {"pie5", "pie4-nonconvex", "clarke4"};
constexpr std::array<std::string_view, 3> kTexts = {kPie5, kPie4Nonconvex, kClarke4};

}  // namespace

std::span<const std::string_view> builtin_example_names() { return kNames; }

std::string_view builtin_example_json(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kTexts[i];
  throw Error(ErrorKind::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

}  // namespace pwl
