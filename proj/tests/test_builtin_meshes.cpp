#include <map>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "polysparse/builtin_meshes.hpp"
#include "polysparse/topology_stats.hpp"
#include "polysparse/torus.hpp"

using namespace polysparse;

namespace {

std::vector<std::size_t> counts(const PeriodicCellComplex& c) {
  std::vector<std::size_t> n;
  for (int m = 0; m <= c.dimension(); ++m) n.push_back(c.count(m));
  return n;
}

// Elements containing the cell-0 representative of each orbit of dimension m.
std::vector<std::size_t> sharing(const PeriodicCellComplex& c, int m) {
  const auto t = tile(c, 3);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.count(m); ++i) out.push_back(t.star({m, t.entity_index(m, i, 0)}).size());
  return out;
}

// Re-anchor one orbit at another lattice translate: every reference to it shifts.
PeriodicCellComplex shifted(const PeriodicCellComplex& c, const std::string& id, const OffsetVector& t) {
  auto orbits = c.orbits();
  for (auto& o : orbits) {
    for (auto& b : o.boundary) {
      if (b.of == id) b.offset = b.offset - t;
    }
    if (o.id == id) {
      for (auto& b : o.boundary) b.offset = b.offset + t;
    }
  }
  return PeriodicCellComplex(c.name(), c.dimension(), orbits);
}

}  // namespace

TEST_CASE("builtin list order and descriptions") {
  const auto list = list_builtins();
  REQUIRE(list.size() == 7);
  CHECK(list.front().name == "triangle2d");
  CHECK(list.back().name == "truncoct3d");
  for (const auto& b : list) {
    CHECK_FALSE(b.description.empty());
    CHECK(to_string(b.id) == b.name);
    CHECK(parse_builtin(b.name) == b.id);
  }
  CHECK_FALSE(parse_builtin("cube").has_value());
}

TEST_CASE("every builtin validates") {
  for (auto id : fixtures::all_meshes()) {
    const auto c = builtin(id);
    CAPTURE(c.name());
    const auto r = validate(c);
    CHECK_MESSAGE(r.ok(), r.failures());
    CHECK(euler_characteristic(c) == 0);
    CHECK(c.name() == to_string(id));
  }
}

TEST_CASE("builtin orbit counts") {
  const std::map<BuiltinMeshId, std::vector<std::size_t>> expected{
      {BuiltinMeshId::triangle2d, {1, 3, 2}},     {BuiltinMeshId::quad2d, {1, 2, 1}},
      {BuiltinMeshId::hexagon2d, {2, 3, 1}},      {BuiltinMeshId::tet3d, {1, 7, 12, 6}},
      {BuiltinMeshId::hex3d, {1, 3, 3, 1}},       {BuiltinMeshId::oct3d, {2, 11, 12, 3}},
      {BuiltinMeshId::truncoct3d, {6, 12, 7, 1}},
  };
  for (const auto& [id, n] : expected) {
    CAPTURE(to_string(id));
    CHECK(counts(builtin(id)) == n);
  }
}

TEST_CASE("tet3d edges: three axes, three face diagonals, one body diagonal") {
  const auto tet = builtin(BuiltinMeshId::tet3d);
  std::map<std::size_t, int> by_share;
  for (auto s : sharing(tet, 1)) ++by_share[s];
  CHECK(by_share == std::map<std::size_t, int>{{4, 3}, {6, 4}});
  const auto stats = classify(tet);
  const auto edges = stats.of_dim(1);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0]->members.size() == 4);  // shared by 6 elements
  CHECK(edges[1]->members.size() == 3);  // shared by 4 elements
}

TEST_CASE("oct3d vertex and edge orbits") {
  const auto oct = builtin(BuiltinMeshId::oct3d);
  // cube centre lies in 6 octahedra, cube corner in 12
  CHECK(sharing(oct, 0) == std::vector<std::size_t>{6, 12});
  std::map<std::size_t, int> edges;
  for (auto s : sharing(oct, 1)) ++edges[s];
  CHECK(edges == std::map<std::size_t, int>{{3, 8}, {4, 3}});
  const auto stats = classify(oct);
  CHECK(stats.of_dim(0).size() == 2);
  CHECK(stats.of_dim(1).size() == 2);
  CHECK(stats.of_dim(2).size() == 1);
}

TEST_CASE("truncoct3d faces split into hexagons and squares") {
  const auto to = builtin(BuiltinMeshId::truncoct3d);
  const auto stats = classify(to);
  const auto faces = stats.of_dim(2);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0]->ratio == Rational(4));
  CHECK(faces[1]->ratio == Rational(3));
  for (auto i : to.orbits_of_dim(2)) {
    const auto n = to.orbit(i).boundary.size();
    CHECK((n == 4 || n == 6));
  }
}

TEST_CASE("element facet counts") {
  const std::map<BuiltinMeshId, std::int64_t> facets{
      {BuiltinMeshId::triangle2d, 3}, {BuiltinMeshId::quad2d, 4}, {BuiltinMeshId::hexagon2d, 6},
      {BuiltinMeshId::tet3d, 4},      {BuiltinMeshId::hex3d, 6},  {BuiltinMeshId::oct3d, 8},
      {BuiltinMeshId::truncoct3d, 14},
  };
  for (const auto& [id, n] : facets) {
    const auto stats = classify(builtin(id));
    for (const auto* c : stats.of_dim(stats.dimension)) CHECK(c->nb_at(stats.dimension - 1) == n);
  }
}

TEST_CASE("translate-equivalent unit cells give identical stats") {
  for (auto id : fixtures::all_meshes()) {
    const auto c = builtin(id);
    const int d = c.dimension();
    OffsetVector t(d);
    t[0] = 1;
    t[d - 1] -= 2;
    const auto reference = topology_report(classify(c));
    for (auto orbit : {c.orbits_of_dim(0)[0], c.orbits_of_dim(d - 1).back(), c.orbits_of_dim(d)[0]}) {
      const auto moved = shifted(c, c.orbit(orbit).id, t);
      CAPTURE(c.name());
      CAPTURE(c.orbit(orbit).id);
      REQUIRE(validate(moved).ok());
      const auto r = topology_report(classify(moved));
      CHECK(r.rows == reference.rows);
    }
  }
}
