#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "polysparse/builtin_meshes.hpp"
#include "polysparse/formula_engine.hpp"
#include "published_compare.hpp"

using namespace polysparse;

namespace {

TopologyStats derived(BuiltinMeshId id) { return classify(builtin(id)); }
TopologyStats implied(BuiltinMeshId id) { return published_fixture(id, FixtureVariant::implied); }

}  // namespace

TEST_CASE("ncdof examples") {
  CHECK(ncdof_poly(Method::HDG, derived(BuiltinMeshId::triangle2d)).str() == "3/2*k + 3/2");
  CHECK(ncdof_poly(Method::VEM, derived(BuiltinMeshId::hexagon2d)).str() == "3*k - 1");
  CHECK(ncdof_poly(Method::TDG1, derived(BuiltinMeshId::quad2d)).str() == "k + 1");
}

TEST_CASE("nnze examples") {
  CHECK(nnze_poly(Method::DG, derived(BuiltinMeshId::triangle2d)).str() == "k^4 + 6*k^3 + 13*k^2 + 12*k + 4");
  CHECK(nnze_poly(Method::HDG, implied(BuiltinMeshId::truncoct3d)).str() ==
        "189/4*k^4 + 567/2*k^3 + 2457/4*k^2 + 567*k + 189");
  CHECK(nnze_poly(Method::TDG1, derived(BuiltinMeshId::hexagon2d)).str() == "7*k^2 + 14*k + 7");
  CHECK(nnze_poly(Method::DG, implied(BuiltinMeshId::truncoct3d)).str() ==
        "5/12*k^6 + 5*k^5 + 145/6*k^4 + 60*k^3 + 965/12*k^2 + 55*k + 15");
}

TEST_CASE("ndof totals") {
  const auto tri = derived(BuiltinMeshId::triangle2d);
  const RationalPolynomial dg2({1, Rational(3, 2), Rational(1, 2)});
  for (auto id : {BuiltinMeshId::triangle2d, BuiltinMeshId::quad2d, BuiltinMeshId::hexagon2d}) {
    CHECK(ndof_total_poly(Method::DG, derived(id)) == dg2);
  }
  CHECK(evaluate(ndof_total_poly(Method::VEM, tri), 1) == Rational(1, 2));
  const auto quad = derived(BuiltinMeshId::quad2d);
  CHECK(ndof_total_poly(Method::HDG, quad) == dg2 + RationalPolynomial({2, 2}));
  CHECK_THROWS_AS(ndof_total_poly(Method::HHO, quad), std::invalid_argument);
  CHECK(metric_poly(Method::TDG2, Metric::ndof, quad) == metric_poly(Method::TDG2, Metric::ncdof, quad));
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(nnze_poly(Method::HDG, derived(BuiltinMeshId::triangle2d)), 2) == Rational(135, 2));
  CHECK(evaluate(ncdof_poly(Method::VEM, implied(BuiltinMeshId::tet3d)), 1) == Rational(1, 6));
  CHECK(evaluate(nnze_poly(Method::TDG2, implied(BuiltinMeshId::hex3d)), 10) == Rational(102487));
  CHECK_THROWS_AS(evaluate(RationalPolynomial({1}), 0), std::invalid_argument);
}

TEST_CASE("published fixtures") {
  const auto printed_tet = published_fixture(BuiltinMeshId::tet3d, FixtureVariant::printed);
  CHECK(printed_tet.derivation == Derivation::fixture_printed);
  CHECK(printed_tet.find(2, 1)->nb_at(2) == 6);
  CHECK(implied(BuiltinMeshId::tet3d).find(2, 1)->nb_at(2) == 7);
  CHECK(implied(BuiltinMeshId::tet3d).derivation == Derivation::fixture_implied);
  CHECK(implied(BuiltinMeshId::truncoct3d).find(0, 1)->ratio == Rational(6));
  CHECK(published_fixture(BuiltinMeshId::truncoct3d, FixtureVariant::printed).find(0, 1)->ratio == Rational(5));
  CHECK_FALSE(printed_tet.find(0, 1)->nb[3].has_value());

  CHECK(implied_substitutions().size() == 2);
  for (auto id : fixtures::all_meshes()) {
    const auto p = published_fixture(id, FixtureVariant::printed);
    const auto i = published_fixture(id, FixtureVariant::implied);
    int differences = 0;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
      differences += p.classes[c].ratio != i.classes[c].ratio;
      for (std::size_t m = 0; m < p.classes[c].nb.size(); ++m) differences += p.classes[c].nb[m] != i.classes[c].nb[m];
    }
    const bool substituted = id == BuiltinMeshId::tet3d || id == BuiltinMeshId::truncoct3d;
    CHECK(differences == (substituted ? 1 : 0));
  }
}

TEST_CASE("2D published polynomials from mesh-derived stats") {
  for (const auto& p : published::polys()) {
    const auto id = published::mesh_of(p.mesh);
    const auto stats = derived(id);
    if (stats.dimension != 2) continue;
    const auto m = published::method_of(p.method);
    CAPTURE(p.mesh);
    CAPTURE(p.method);
    CHECK(metric_poly(m, Metric::ncdof, stats) == published::to_poly(p.ncdof));
    CHECK(nnze_poly(m, stats) == published::to_poly(p.nnze));
  }
}

TEST_CASE("element and facet methods match published polynomials from mesh-derived stats in 3D") {
  for (const auto& p : published::polys()) {
    const auto m = published::method_of(p.method);
    if (m == Method::VEM) continue;
    const auto stats = derived(published::mesh_of(p.mesh));
    CAPTURE(p.mesh);
    CAPTURE(p.method);
    CHECK(ncdof_poly(m, stats) == published::to_poly(p.ncdof));
    CHECK(nnze_poly(m, stats) == published::to_poly(p.nnze));
  }
}

TEST_CASE("ordering properties") {
  for (auto id : fixtures::all_meshes()) {
    for (const auto& stats : {derived(id), implied(id)}) {
      const auto dg = nnze_poly(Method::DG, stats), t2 = nnze_poly(Method::TDG2, stats),
                 t1 = nnze_poly(Method::TDG1, stats), hdg = ncdof_poly(Method::HDG, stats),
                 hho = ncdof_poly(Method::HHO, stats);
      for (int k = 1; k <= 10; ++k) {
        CHECK(evaluate(t1, k) <= evaluate(t2, k));
        CHECK(evaluate(t2, k) <= evaluate(dg, k));
        CHECK(evaluate(hho, k) <= evaluate(hdg, k));
      }
      const int d = stats.dimension;
      CHECK(dg.degree() == 2 * d);
      for (auto m : {Method::TDG1, Method::TDG2, Method::HDG, Method::HHO, Method::VEM}) {
        CHECK(nnze_poly(m, stats).degree() == 2 * (d - 1));
      }
    }
  }
}

TEST_CASE("VEM double sum is symmetric for mesh-derived stats") {
  for (auto id : fixtures::all_meshes()) {
    const auto stats = derived(id);
    const int d = stats.dimension;
    auto sub = [&](int m) { return local_ndof_poly(Method::VEM, DofRole::sub(m), d); };
    // S(p, q) = sum over dim-p classes of R * Nb(q)
    auto s = [&](int p, int q) {
      Rational sum;
      for (const auto* c : stats.of_dim(p)) sum += c->ratio * Rational(c->nb_at(q));
      return sum;
    };
    RationalPolynomial forward, transposed;
    for (int p = 0; p < d; ++p) {
      for (int q = 0; q < d; ++q) {
        forward += sub(p) * sub(q) * s(p, q);
        transposed += sub(p) * sub(q) * s(q, p);
      }
    }
    CHECK(forward == transposed);
    CHECK(forward == nnze_poly(Method::VEM, stats));
  }
}

TEST_CASE("stats validation") {
  auto stats = derived(BuiltinMeshId::quad2d);
  stats.classes[0].nb.pop_back();
  CHECK_THROWS_AS(ncdof_poly(Method::DG, stats), std::invalid_argument);
  TopologyStats empty;
  empty.dimension = 2;
  CHECK_THROWS_AS(nnze_poly(Method::HDG, empty), std::invalid_argument);
}
