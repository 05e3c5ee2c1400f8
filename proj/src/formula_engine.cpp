#include "polysparse/formula_engine.hpp"

#include <stdexcept>

namespace polysparse {

std::string to_string(Metric m) {
  switch (m) {
    case Metric::ndof: return "ndof";
    case Metric::ncdof: return "ncdof";
    case Metric::nnze: return "nnze";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
  for (auto m : {Metric::ndof, Metric::ncdof, Metric::nnze}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

void check_stats(const TopologyStats& stats) {
  const int d = stats.dimension;
  if (d < 2 || d > 3) throw std::invalid_argument("stats dimension must be 2 or 3");
  for (const auto& c : stats.classes) {
    if (c.dim < 0 || c.dim > d || c.nb.size() != static_cast<std::size_t>(d) + 1) {
      throw std::invalid_argument("dimension mismatch in class " + c.label());
    }
  }
  if (stats.of_dim(d).empty() || stats.of_dim(d - 1).empty()) {
    throw std::invalid_argument("stats need element and facet classes");
  }
}

RationalPolynomial vem_sub(int m, int d) { return local_ndof_poly(Method::VEM, DofRole::sub(m), d); }

}  // namespace

RationalPolynomial ncdof_poly(Method method, const TopologyStats& stats) {
  check_stats(stats);
  const int d = stats.dimension;
  if (is_element_method(method)) {
    return local_ndof_poly(method, DofRole::element(), d) * stats.ratio_sum(d);
  }
  if (is_facet_method(method)) {
    return local_ndof_poly(method, DofRole::facet(), d) * stats.ratio_sum(d - 1);
  }
  RationalPolynomial p;
  for (int m = 0; m < d; ++m) p += vem_sub(m, d) * stats.ratio_sum(m);
  return p;
}

RationalPolynomial nnze_poly(Method method, const TopologyStats& stats) {
  check_stats(stats);
  const int d = stats.dimension;
  RationalPolynomial p;
  if (is_element_method(method)) {
    const auto el = local_ndof_poly(method, DofRole::element(), d);
    Rational blocks;
    for (const auto* c : stats.of_dim(d)) blocks += c->ratio * Rational(c->nb_at(d - 1) + 1);
    return el * el * blocks;
  }
  if (is_facet_method(method)) {
    const auto ft = local_ndof_poly(method, DofRole::facet(), d);
    Rational blocks;
    for (const auto* c : stats.of_dim(d - 1)) blocks += c->ratio * Rational(c->nb_at(d - 1));
    return ft * ft * blocks;
  }
  for (const auto& c : stats.classes) {
    if (c.dim == d) continue;  // no unknowns left on elements
    RationalPolynomial row;
    for (int m = 0; m < d; ++m) row += vem_sub(m, d) * Rational(c.nb_at(m));
    p += vem_sub(c.dim, d) * row * c.ratio;
  }
  return p;
}

RationalPolynomial ndof_total_poly(Method method, const TopologyStats& stats) {
  check_stats(stats);
  const int d = stats.dimension;
  if (method == Method::HHO) {
    throw std::invalid_argument("ndof is not defined for HHO: the cell unknown degree is unspecified");
  }
  if (is_element_method(method)) return ncdof_poly(method, stats);
  return ncdof_poly(method, stats) + interior_ndof_poly(method, d) * stats.ratio_sum(d);
}

RationalPolynomial metric_poly(Method method, Metric metric, const TopologyStats& stats) {
  switch (metric) {
    case Metric::ndof: return ndof_total_poly(method, stats);
    case Metric::ncdof: return ncdof_poly(method, stats);
    case Metric::nnze: return nnze_poly(method, stats);
  }
  throw std::invalid_argument("unknown metric");
}

Rational evaluate(const RationalPolynomial& poly, int k) {
  if (k < 1) throw std::invalid_argument("degree k must be >= 1, got " + std::to_string(k));
  return poly(Rational(k));
}

namespace {

struct Row {
  int dim;
  std::vector<int> nb;  // V, Ed, Fa[, C]
  Rational ratio;
};

std::vector<Row> printed_rows(BuiltinMeshId mesh) {
  const Rational h(1, 2), t(1, 3), s(1, 6);
  switch (mesh) {
    case BuiltinMeshId::triangle2d:
      return {{0, {7, 12, 6}, h}, {1, {4, 5, 2}, Rational(3, 2)}, {2, {3, 3, 1}, 1}};
    case BuiltinMeshId::quad2d:
      return {{0, {9, 12, 4}, 1}, {1, {6, 7, 2}, 2}, {2, {4, 4, 1}, 1}};
    case BuiltinMeshId::hexagon2d:
      return {{0, {13, 15, 3}, 2}, {1, {10, 11, 2}, 3}, {2, {6, 6, 1}, 1}};
    case BuiltinMeshId::tet3d:
      return {{0, {15, 43, 57}, s},
              {1, {8, 18, 18}, Rational(2, 3)},
              {1, {6, 12, 12}, h},
              {2, {5, 9, 6}, 2},
              {3, {4, 6, 4}, 1}};
    case BuiltinMeshId::hex3d:
      return {{0, {27, 54, 12}, 1}, {1, {18, 33, 20}, 3}, {2, {12, 20, 11}, 3}, {3, {8, 12, 6}, 1}};
    case BuiltinMeshId::oct3d:
      return {{0, {15, 44, 36}, t},
              {0, {27, 86, 72}, Rational(2, 3)},
              {1, {11, 28, 21}, Rational(8, 3)},
              {1, {14, 37, 28}, 1},
              {2, {9, 21, 15}, 4},
              {3, {6, 12, 8}, 1}};
    case BuiltinMeshId::truncoct3d:
      return {{0, {71, 116, 50}, 5},
              {1, {58, 93, 39}, 12},
              {2, {42, 66, 27}, 3},
              {2, {44, 68, 27}, 4},
              {3, {24, 36, 14}, 1}};
  }
  return {};
}

}  // namespace

const std::vector<FixtureSubstitution>& implied_substitutions() {
  static const std::vector<FixtureSubstitution> subs{
      {BuiltinMeshId::tet3d, "(Fa,1) Nb(Fa)", 6, 7},
      {BuiltinMeshId::truncoct3d, "(V,1) R", 5, 6},
  };
  return subs;
}

TopologyStats published_fixture(BuiltinMeshId mesh, FixtureVariant variant) {
  TopologyStats stats;
  stats.mesh = to_string(mesh);
  const auto rows = printed_rows(mesh);
  stats.dimension = rows.back().dim;
  stats.derivation = variant == FixtureVariant::printed ? Derivation::fixture_printed : Derivation::fixture_implied;
  std::vector<int> next(4, 1);
  for (const auto& r : rows) {
    TopologyClass c;
    c.dim = r.dim;
    c.index = next[static_cast<std::size_t>(r.dim)]++;
    for (int v : r.nb) c.nb.emplace_back(v);
    c.nb.resize(static_cast<std::size_t>(stats.dimension) + 1);
    c.ratio = r.ratio;
    stats.classes.push_back(std::move(c));
  }
  if (variant == FixtureVariant::implied) {
    if (mesh == BuiltinMeshId::tet3d) stats.classes[3].nb[2] = 7;
    if (mesh == BuiltinMeshId::truncoct3d) stats.classes[0].ratio = 6;
  }
  return stats;
}

}  // namespace polysparse
