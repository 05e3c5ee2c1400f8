#pragma once

#include <string>
#include <vector>

#include "polysparse/builtin_meshes.hpp"
#include "polysparse/periodic_complex.hpp"

namespace fixtures {

inline std::vector<polysparse::BuiltinMeshId> all_meshes() {
  std::vector<polysparse::BuiltinMeshId> ids;
  for (const auto& b : polysparse::list_builtins()) ids.push_back(b.id);
  return ids;
}

// quad2d spelled out as a mesh document.
inline std::string quad_document() {
  return R"({
  "name": "quad2d",
  "dimension": 2,
  "orbits": [
    {"id": "v", "dim": 0, "boundary": []},
    {"id": "ex", "dim": 1, "boundary": [{"of": "v", "offset": [0, 0]}, {"of": "v", "offset": [1, 0]}]},
    {"id": "ey", "dim": 1, "boundary": [{"of": "v", "offset": [0, 0]}, {"of": "v", "offset": [0, 1]}]},
    {"id": "q", "dim": 2, "boundary": [
      {"of": "ex", "offset": [0, 0]}, {"of": "ey", "offset": [1, 0]},
      {"of": "ex", "offset": [0, 1]}, {"of": "ey", "offset": [0, 0]}]}
  ]
})";
}

// quad2d whose cells are three units long along x: valid, but neighbourhoods wrap on
// small tilings.
inline polysparse::PeriodicCellComplex long_quad() {
  using polysparse::EntityOrbit;
  using polysparse::OffsetVector;
  std::vector<EntityOrbit> orbits{
      {"v", 0, {}},
      {"ex", 1, {{"v", OffsetVector{0, 0}}, {"v", OffsetVector{3, 0}}}},
      {"ey", 1, {{"v", OffsetVector{0, 0}}, {"v", OffsetVector{0, 1}}}},
      {"q", 2, {{"ex", OffsetVector{0, 0}}, {"ey", OffsetVector{3, 0}}, {"ex", OffsetVector{0, 1}}, {"ey", OffsetVector{0, 0}}}},
  };
  return polysparse::PeriodicCellComplex("long_quad", 2, std::move(orbits));
}

}  // namespace fixtures
