#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "polysparse/builtin_meshes.hpp"
#include "polysparse/periodic_complex.hpp"
#include "polysparse/torus.hpp"

using namespace polysparse;

namespace {

std::vector<std::size_t> counts(const PeriodicCellComplex& c) {
  std::vector<std::size_t> n;
  for (int m = 0; m <= c.dimension(); ++m) n.push_back(c.count(m));
  return n;
}

std::vector<std::size_t> closure_sizes(const Closure& cl) {
  std::vector<std::size_t> n;
  for (const auto& level : cl) n.push_back(level.size());
  return n;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("parse builtin triangle document") {
  const auto doc = serialize_mesh(builtin(BuiltinMeshId::triangle2d));
  const auto c = parse_mesh(doc);
  CHECK(c.name() == "triangle2d");
  CHECK(counts(c) == std::vector<std::size_t>{1, 3, 2});
}

TEST_CASE("parse handwritten quad document") {
  const auto c = parse_mesh(fixtures::quad_document());
  CHECK(counts(c) == std::vector<std::size_t>{1, 2, 1});
  CHECK(validate(c).ok());
  CHECK(c.orbit(c.index_of("q")).boundary.size() == 4);
}

TEST_CASE("boundary of the wrong dimension is rejected") {
  const auto doc = replace(fixtures::quad_document(), R"({"id": "ey", "dim": 1, "boundary": [{"of": "v", "offset": [0, 0]})",
                           R"({"id": "ey", "dim": 1, "boundary": [{"of": "ex", "offset": [0, 0]})");
  CHECK_THROWS_WITH_AS(parse_mesh(doc), doctest::Contains("boundary dimension mismatch"), MeshError);
}

TEST_CASE("schema violations are rejected") {
  const auto base = fixtures::quad_document();
  SUBCASE("unknown top-level field") {
    CHECK_THROWS_AS(parse_mesh(replace(base, R"("dimension": 2,)", R"("dimension": 2, "extra": 1,)")), MeshError);
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(parse_mesh(replace(base, R"("name": "quad2d",)", "")), MeshError);
  }
  SUBCASE("wrong type") {
    CHECK_THROWS_AS(parse_mesh(replace(base, R"("dimension": 2)", R"("dimension": "2")")), MeshError);
  }
  SUBCASE("dangling reference") {
    CHECK_THROWS_WITH_AS(parse_mesh(replace(base, R"({"of": "ex", "offset": [0, 1]})", R"({"of": "nope", "offset": [0, 1]})")),
                         doctest::Contains("nope"), MeshError);
  }
  SUBCASE("offset length") {
    CHECK_THROWS_WITH_AS(parse_mesh(replace(base, R"({"of": "ex", "offset": [0, 1]})", R"({"of": "ex", "offset": [0, 1, 0]})")),
                         doctest::Contains("dimension mismatch in offsets"), MeshError);
  }
  SUBCASE("vertex with boundary") {
    CHECK_THROWS_AS(parse_mesh(replace(base, R"({"id": "v", "dim": 0, "boundary": []})",
                                       R"({"id": "v", "dim": 0, "boundary": [{"of": "v", "offset": [0, 0]}]})")),
                    MeshError);
  }
  SUBCASE("malformed json") { CHECK_THROWS_AS(parse_mesh("{"), MeshError); }
}

TEST_CASE("orientation data is accepted and ignored") {
  const auto doc = replace(fixtures::quad_document(), R"({"of": "ex", "offset": [0, 0]})",
                           R"({"of": "ex", "offset": [0, 0], "orientation": -1})");
  CHECK(parse_mesh(doc) == parse_mesh(fixtures::quad_document()));
}

TEST_CASE("serialize then parse is the identity") {
  for (auto id : fixtures::all_meshes()) {
    const auto c = builtin(id);
    CAPTURE(c.name());
    CHECK(parse_mesh(serialize_mesh(c)) == c);
    CHECK(serialize_mesh(parse_mesh(serialize_mesh(c))) == serialize_mesh(c));
  }
}

TEST_CASE("serialize keeps counts and names") {
  CHECK(counts(parse_mesh(serialize_mesh(builtin(BuiltinMeshId::quad2d)))) == std::vector<std::size_t>{1, 2, 1});
  CHECK(counts(parse_mesh(serialize_mesh(builtin(BuiltinMeshId::hexagon2d)))) == std::vector<std::size_t>{2, 3, 1});
  const auto q = builtin(BuiltinMeshId::quad2d);
  const PeriodicCellComplex unnamed("", 2, q.orbits());
  const auto doc = serialize_mesh(unnamed);
  CHECK(doc.find(R"("name": "")") != std::string::npos);
  CHECK(parse_mesh(doc).name().empty());
}

TEST_CASE("validate tet3d") {
  const auto c = builtin(BuiltinMeshId::tet3d);
  const auto r = validate(c);
  CHECK(r.ok());
  CHECK(counts(c) == std::vector<std::size_t>{1, 7, 12, 6});
  CHECK(euler_characteristic(c) == 0);
}

TEST_CASE("validate flags a broken facet rule") {
  auto orbits = builtin(BuiltinMeshId::quad2d).orbits();
  auto& face = orbits.back();
  REQUIRE(face.dim == 2);
  face.boundary.pop_back();
  const PeriodicCellComplex broken("broken", 2, orbits);
  const auto r = validate(broken);
  CHECK_FALSE(r.ok());
  REQUIRE(r.find("facet-rule") != nullptr);
  CHECK_FALSE(r.find("facet-rule")->passed);
  CHECK(r.find("facet-rule")->detail.find("1 time(s)") != std::string::npos);
  CHECK_THROWS_WITH_AS(parse_mesh(serialize_mesh(broken)), doctest::Contains("facet orbit"), MeshError);
}

TEST_CASE("validate hexahedron counts") {
  const auto c = builtin(BuiltinMeshId::hex3d);
  CHECK(counts(c) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(euler_characteristic(c) == 0);
  CHECK(validate(c).ok());
}

TEST_CASE("validate flags a non-zero Euler characteristic") {
  auto orbits = builtin(BuiltinMeshId::quad2d).orbits();
  orbits.insert(orbits.begin(), EntityOrbit{"stray", 0, {}});
  const auto r = validate(PeriodicCellComplex("stray", 2, orbits));
  CHECK_FALSE(r.find("euler-characteristic")->passed);
}

TEST_CASE("closure of single cells") {
  CHECK(closure_sizes(closure_at(builtin(BuiltinMeshId::hex3d), builtin(BuiltinMeshId::hex3d).orbits_of_dim(3)[0])) ==
        std::vector<std::size_t>{8, 12, 6, 1});
  const auto tet = builtin(BuiltinMeshId::tet3d);
  for (auto el : tet.orbits_of_dim(3)) CHECK(closure_sizes(closure_at(tet, el)) == std::vector<std::size_t>{4, 6, 4, 1});
  const auto to = builtin(BuiltinMeshId::truncoct3d);
  CHECK(closure_sizes(closure(to, to.orbit(to.orbits_of_dim(3)[0]).id)) == std::vector<std::size_t>{24, 36, 14, 1});
  CHECK_THROWS_AS(closure(to, "missing"), std::invalid_argument);
}

TEST_CASE("closure includes self with zero offset") {
  const auto q = builtin(BuiltinMeshId::quad2d);
  const auto el = q.orbits_of_dim(2)[0];
  const auto cl = closure_at(q, el);
  REQUIRE(cl[2].size() == 1);
  CHECK(cl[2][0].orbit == el);
  CHECK(cl[2][0].offset.is_zero());
}

TEST_CASE("tile counts") {
  const auto tri = tile(builtin(BuiltinMeshId::triangle2d), 3);
  CHECK(tri.count(2) == 18);
  CHECK(tri.count(1) == 27);
  CHECK(tri.count(0) == 9);
  const auto tet = tile(builtin(BuiltinMeshId::tet3d), 2);
  CHECK(tet.count(3) == 48);
  CHECK(tet.count(2) == 96);
  CHECK(tet.count(1) == 56);
  CHECK(tet.count(0) == 8);
  const std::vector<int> bad{3, 0};
  CHECK_THROWS_AS(tile(builtin(BuiltinMeshId::quad2d), bad), std::invalid_argument);
  CHECK_THROWS_AS(tile(builtin(BuiltinMeshId::quad2d), -1), std::invalid_argument);
  const std::vector<int> short_tiling{3};
  CHECK_THROWS_AS(tile(builtin(BuiltinMeshId::quad2d), short_tiling), std::invalid_argument);
}

TEST_CASE("anisotropic tiling") {
  const std::vector<int> n{2, 5};
  const auto t = tile(builtin(BuiltinMeshId::hexagon2d), n);
  CHECK(t.cell_count() == 10);
  CHECK(t.count(0) == 20);
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.cell_index(t.cell_coords(7)) == 7);
  CHECK(t.cell_index(OffsetVector{-1, 5}) == t.cell_index(OffsetVector{1, 0}));
}

TEST_CASE("torus invariants on every builtin") {
  for (auto id : fixtures::all_meshes()) {
    const auto c = builtin(id);
    const int d = c.dimension();
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(c.name());
      CAPTURE(n);
      const auto t = tile(c, n);
      CHECK(t.euler_characteristic() == 0);
      for (int m = 0; m <= d; ++m) CHECK(t.count(m) == c.count(m) * t.cell_count());
      for (std::size_t f = 0; f < t.count(d - 1); ++f) {
        CHECK(t.facet_incidences(f) == 2);
        if (n >= 2) CHECK(t.star({d - 1, f}).size() == 2);
      }
    }
  }
}

TEST_CASE("torus closure is closed and counts balance") {
  for (auto id : fixtures::all_meshes()) {
    const auto c = builtin(id);
    const int d = c.dimension();
    const auto t = tile(c, 3);
    CAPTURE(c.name());
    for (std::size_t el = 0; el < t.element_count(); ++el) {
      const auto cl = t.closure({d, el});
      for (int m = 0; m <= d; ++m) {
        const auto direct = t.element_closure(el, m);
        CHECK(std::vector<std::uint32_t>(direct.begin(), direct.end()) == cl[static_cast<std::size_t>(m)]);
      }
      // closure of anything in the closure stays inside it
      for (int m = 1; m < d; ++m) {
        for (auto e : cl[static_cast<std::size_t>(m)]) {
          const auto sub = t.closure({m, e});
          for (int p = 0; p <= m; ++p) {
            for (auto x : sub[static_cast<std::size_t>(p)]) {
              CHECK(std::binary_search(cl[static_cast<std::size_t>(p)].begin(), cl[static_cast<std::size_t>(p)].end(), x));
            }
          }
        }
      }
    }
    for (int m = 0; m <= d; ++m) {
      std::size_t lhs = 0, rhs = 0;
      for (std::size_t el = 0; el < t.element_count(); ++el) lhs += t.element_closure(el, m).size();
      for (std::size_t e = 0; e < t.count(m); ++e) rhs += t.star({m, e}).size();
      CHECK(lhs == rhs);
    }
  }
}
