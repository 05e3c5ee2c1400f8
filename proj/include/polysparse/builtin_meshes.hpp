#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysparse/periodic_complex.hpp"

namespace polysparse {

enum class BuiltinMeshId { triangle2d, quad2d, hexagon2d, tet3d, hex3d, oct3d, truncoct3d };

struct BuiltinInfo {
  BuiltinMeshId id;
  std::string name;
  std::string description;
};

// Presentation order: the 2D meshes first, then the 3D ones.
std::vector<BuiltinInfo> list_builtins();

PeriodicCellComplex builtin(BuiltinMeshId id);

std::string to_string(BuiltinMeshId id);
std::optional<BuiltinMeshId> parse_builtin(std::string_view name);

}  // namespace polysparse
