#pragma once

#include <span>
#include <string_view>

namespace pwl {

// Names accepted by `pwlinv example`: pie5, pie4-nonconvex, clarke4.
std::span<const std::string_view> builtin_example_names();

// Map file text of a builtin example; throws Error{InvalidArgument} for an
// unknown name.
std::string_view builtin_example_json(std::string_view name);

}  // namespace pwl
