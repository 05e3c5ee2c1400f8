#include "polysparse/builtin_meshes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace polysparse {
namespace {

// Vertex (or any entity) reference: orbit index within its dimension plus lattice offset.
struct Ref {
  int orbit;
  OffsetVector off;
  friend auto operator<=>(const Ref&, const Ref&) = default;
  friend bool operator==(const Ref&, const Ref&) = default;
};

// Assembles a unit cell from polytopes given as vertex cycles. An entity is identified by
// its vertex set modulo lattice translation; the canonical translate is the one whose
// shifted, sorted vertex list is lexicographically smallest.
class Builder {
 public:
  Builder(int dim, int vertex_orbits) : dim_(dim), nv_(vertex_orbits), keys_(static_cast<std::size_t>(dim) + 1),
                                        bnd_(static_cast<std::size_t>(dim) + 1) {}

  Ref polygon(const std::vector<Ref>& cycle) {
    std::vector<Ref> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Ref& a = cycle[i];
      const Ref& b = cycle[(i + 1) % cycle.size()];
      edges.push_back(entity(1, {a, b}, {a, b}));
    }
    return entity(2, cycle, edges);
  }

  Ref polyhedron(const std::vector<std::vector<Ref>>& faces) {
    std::vector<Ref> bnd;
    std::vector<Ref> verts;
    for (const auto& f : faces) {
      bnd.push_back(polygon(f));
      verts.insert(verts.end(), f.begin(), f.end());
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return entity(3, verts, bnd);
  }

  PeriodicCellComplex build(const std::string& name) const {
    static constexpr std::array<char, 4> prefix{'v', 'e', 'f', 'c'};
    auto id = [&](int m, int i) { return std::string(1, prefix[static_cast<std::size_t>(m)]) + std::to_string(i); };
    std::vector<EntityOrbit> orbits;
    for (int i = 0; i < nv_; ++i) orbits.push_back({id(0, i), 0, {}});
    for (int m = 1; m <= dim_; ++m) {
      int i = 0;
      for (const auto& b : bnd_[static_cast<std::size_t>(m)]) {
        EntityOrbit o{id(m, i++), m, {}};
        for (const auto& r : b) o.boundary.push_back({id(m - 1, r.orbit), r.off});
        orbits.push_back(std::move(o));
      }
    }
    return PeriodicCellComplex(name, dim_, std::move(orbits));
  }

 private:
  Ref entity(int m, const std::vector<Ref>& verts, const std::vector<Ref>& boundary) {
    std::vector<Ref> best;
    OffsetVector shift;
    for (const auto& v : verts) {
      std::vector<Ref> key;
      for (const auto& w : verts) key.push_back({w.orbit, w.off - v.off});
      std::sort(key.begin(), key.end());
      if (best.empty() || key < best) {
        best = std::move(key);
        shift = v.off;
      }
    }
    auto& keys = keys_[static_cast<std::size_t>(m)];
    auto [it, inserted] = keys.try_emplace(best, static_cast<int>(keys.size()));
    if (inserted) {
      std::vector<Ref> rel;
      for (const auto& r : boundary) rel.push_back({r.orbit, r.off - shift});
      bnd_[static_cast<std::size_t>(m)].push_back(std::move(rel));
    }
    return {it->second, shift};
  }

  int dim_;
  int nv_;
  std::vector<std::map<std::vector<Ref>, int>> keys_;
  std::vector<std::vector<std::vector<Ref>>> bnd_;
};

Ref v2(int o, int x, int y) { return {o, OffsetVector{x, y}}; }
Ref v3(int o, int x, int y, int z) { return {o, OffsetVector{x, y, z}}; }

PeriodicCellComplex make_triangle() {
  Builder b(2, 1);
  b.polygon({v2(0, 0, 0), v2(0, 1, 0), v2(0, 1, 1)});
  b.polygon({v2(0, 0, 0), v2(0, 1, 1), v2(0, 0, 1)});
  return b.build("triangle2d");
}

PeriodicCellComplex make_quad() {
  Builder b(2, 1);
  b.polygon({v2(0, 0, 0), v2(0, 1, 0), v2(0, 1, 1), v2(0, 0, 1)});
  return b.build("quad2d");
}

// Honeycomb with two vertex orbits; v1 at cell c touches v0 at c, c+e1, c+e2.
PeriodicCellComplex make_hexagon() {
  Builder b(2, 2);
  b.polygon({v2(0, 0, 1), v2(1, 0, 0), v2(0, 1, 0), v2(1, 1, 0), v2(0, 1, 1), v2(1, 0, 1)});
  return b.build("hexagon2d");
}

// Six tetrahedra along the monotone lattice paths from 0 to (1,1,1).
PeriodicCellComplex make_tet() {
  Builder b(3, 1);
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<OffsetVector, 4> path;
    OffsetVector cur{0, 0, 0};
    path[0] = cur;
    for (int i = 0; i < 3; ++i) {
      cur[perm[static_cast<std::size_t>(i)]] = 1;
      path[static_cast<std::size_t>(i) + 1] = cur;
    }
    std::vector<std::vector<Ref>> faces;
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<Ref> f;
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != skip) f.push_back({0, path[i]});
      }
      faces.push_back(std::move(f));
    }
    b.polyhedron(faces);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return b.build("tet3d");
}

PeriodicCellComplex make_hex() {
  Builder b(3, 1);
  auto c = [](int x, int y, int z) { return v3(0, x, y, z); };
  b.polyhedron({{c(0, 0, 0), c(1, 0, 0), c(1, 1, 0), c(0, 1, 0)},
                {c(0, 0, 1), c(1, 0, 1), c(1, 1, 1), c(0, 1, 1)},
                {c(0, 0, 0), c(1, 0, 0), c(1, 0, 1), c(0, 0, 1)},
                {c(0, 1, 0), c(1, 1, 0), c(1, 1, 1), c(0, 1, 1)},
                {c(0, 0, 0), c(0, 1, 0), c(0, 1, 1), c(0, 0, 1)},
                {c(1, 0, 0), c(1, 1, 0), c(1, 1, 1), c(1, 0, 1)}});
  return b.build("hex3d");
}

// Octahedra centred on cube faces: a face square plus the two adjacent cube centres.
// Coordinates below are doubled; odd points are cube centres (orbit 0), even points
// cube corners (orbit 1). The centre is declared first, which also puts the spokes first.
PeriodicCellComplex make_oct() {
  auto vr = [](const std::array<int, 3>& p) {
    const bool centre = (p[0] & 1) && (p[1] & 1) && (p[2] & 1);
    // x - 1 (centre) or x (corner) is even, so the division is exact.
    auto half = [&](int x) { return centre ? (x - 1) / 2 : x / 2; };
    OffsetVector off{half(p[0]), half(p[1]), half(p[2])};
    return Ref{centre ? 0 : 1, off};
  };
  Builder b(3, 2);
  for (int axis : {2, 1, 0}) {
    std::array<int, 2> other{};
    int j = 0;
    for (int a = 0; a < 3; ++a) {
      if (a != axis) other[static_cast<std::size_t>(j++)] = a;
    }
    std::array<std::array<int, 3>, 4> square{};
    const std::array<std::array<int, 2>, 4> uv{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
    for (std::size_t i = 0; i < 4; ++i) {
      square[i][static_cast<std::size_t>(other[0])] = uv[i][0];
      square[i][static_cast<std::size_t>(other[1])] = uv[i][1];
    }
    std::vector<std::vector<Ref>> faces;
    for (int h : {1, -1}) {
      std::array<int, 3> apex{1, 1, 1};
      apex[static_cast<std::size_t>(axis)] = h;
      for (std::size_t i = 0; i < 4; ++i) faces.push_back({vr(apex), vr(square[i]), vr(square[(i + 1) % 4])});
    }
    b.polyhedron(faces);
  }
  return b.build("oct3d");
}

// Truncated octahedron of the body-centred cubic Voronoi honeycomb, in the primitive
// lattice basis (-1,1,1), (1,-1,1), (1,1,-1). Hexagons come first, then squares.
PeriodicCellComplex make_truncoct() {
  struct V {
    int o;
    std::array<int, 3> t;
  };
  const std::vector<std::vector<V>> faces{
      {{5, {1, 1, 1}}, {1, {1, 1, 1}}, {0, {1, 1, 1}}, {4, {1, 1, 1}}, {2, {0, 1, 1}}, {3, {0, 1, 1}}},
      {{1, {0, 1, 1}}, {4, {0, 0, 1}}, {0, {0, 0, 1}}, {2, {0, 0, 1}}, {5, {1, 1, 1}}, {3, {0, 1, 1}}},
      {{4, {1, 1, 1}}, {3, {0, 1, 0}}, {1, {0, 1, 0}}, {5, {0, 1, 0}}, {0, {0, 1, 1}}, {2, {0, 1, 1}}},
      {{0, {0, 1, 1}}, {5, {0, 1, 0}}, {2, {-1, 0, 0}}, {3, {-1, 0, 0}}, {4, {0, 0, 1}}, {1, {0, 1, 1}}},
      {{4, {1, 0, 1}}, {3, {0, 0, 0}}, {2, {0, 0, 0}}, {5, {1, 1, 0}}, {0, {1, 1, 1}}, {1, {1, 1, 1}}},
      {{0, {0, 0, 1}}, {5, {0, 0, 0}}, {1, {0, 0, 0}}, {3, {0, 0, 0}}, {4, {1, 0, 1}}, {2, {0, 0, 1}}},
      {{5, {1, 1, 0}}, {2, {0, 0, 0}}, {0, {0, 0, 0}}, {4, {0, 0, 0}}, {1, {0, 1, 0}}, {3, {0, 1, 0}}},
      {{2, {-1, 0, 0}}, {4, {0, 0, 0}}, {0, {0, 0, 0}}, {1, {0, 0, 0}}, {5, {0, 0, 0}}, {3, {-1, 0, 0}}},
      {{2, {0, 1, 1}}, {0, {0, 1, 1}}, {1, {0, 1, 1}}, {3, {0, 1, 1}}},
      {{1, {0, 0, 0}}, {0, {0, 0, 0}}, {2, {0, 0, 0}}, {3, {0, 0, 0}}},
      {{2, {0, 0, 1}}, {4, {1, 0, 1}}, {1, {1, 1, 1}}, {5, {1, 1, 1}}},
      {{1, {0, 1, 0}}, {4, {0, 0, 0}}, {2, {-1, 0, 0}}, {5, {0, 1, 0}}},
      {{0, {1, 1, 1}}, {5, {1, 1, 0}}, {3, {0, 1, 0}}, {4, {1, 1, 1}}},
      {{3, {-1, 0, 0}}, {5, {0, 0, 0}}, {0, {0, 0, 1}}, {4, {0, 0, 1}}},
  };
  Builder b(3, 6);
  std::vector<std::vector<Ref>> cell;
  for (const auto& f : faces) {
    std::vector<Ref> cyc;
    for (const auto& v : f) cyc.push_back(v3(v.o, v.t[0], v.t[1], v.t[2]));
    cell.push_back(std::move(cyc));
  }
  b.polyhedron(cell);
  return b.build("truncoct3d");
}

const std::vector<BuiltinInfo>& table() {
  static const std::vector<BuiltinInfo> t{
      {BuiltinMeshId::triangle2d, "triangle2d", "unit squares split along one diagonal into two triangles"},
      {BuiltinMeshId::quad2d, "quad2d", "structured quadrilaterals, one square per cell"},
      {BuiltinMeshId::hexagon2d, "hexagon2d", "regular hexagonal honeycomb, two vertex orbits"},
      {BuiltinMeshId::tet3d, "tet3d", "Freudenthal (Kuhn) split of the unit cube into six tetrahedra"},
      {BuiltinMeshId::hex3d, "hex3d", "structured hexahedra, one cube per cell"},
      {BuiltinMeshId::oct3d, "oct3d", "octahedra centred on cube faces, two pyramids glued across each face"},
      {BuiltinMeshId::truncoct3d, "truncoct3d", "truncated octahedra, Voronoi cells of the body-centred cubic lattice"},
  };
  return t;
}

}  // namespace

std::vector<BuiltinInfo> list_builtins() { return table(); }

std::string to_string(BuiltinMeshId id) {
  for (const auto& info : table()) {
    if (info.id == id) return info.name;
  }
  throw std::invalid_argument("unknown builtin mesh id");
}

std::optional<BuiltinMeshId> parse_builtin(std::string_view name) {
  for (const auto& info : table()) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

PeriodicCellComplex builtin(BuiltinMeshId id) {
  switch (id) {
    case BuiltinMeshId::triangle2d: return make_triangle();
    case BuiltinMeshId::quad2d: return make_quad();
    case BuiltinMeshId::hexagon2d: return make_hexagon();
    case BuiltinMeshId::tet3d: return make_tet();
    case BuiltinMeshId::hex3d: return make_hex();
    case BuiltinMeshId::oct3d: return make_oct();
    case BuiltinMeshId::truncoct3d: return make_truncoct();
  }
  throw std::invalid_argument("unknown builtin mesh id");
}

}  // namespace polysparse
