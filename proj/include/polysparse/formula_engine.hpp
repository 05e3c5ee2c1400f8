#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysparse/builtin_meshes.hpp"
#include "polysparse/dof_model.hpp"
#include "polysparse/polynomial.hpp"
#include "polysparse/topology_stats.hpp"

namespace polysparse {

enum class Metric { ndof, ncdof, nnze };

std::string to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

enum class FixtureVariant { printed, implied };

// Per-element coupling unknowns after condensation.
RationalPolynomial ncdof_poly(Method method, const TopologyStats& stats);
// Per-element non-zeros of the condensed system, every admissible coupling counted.
RationalPolynomial nnze_poly(Method method, const TopologyStats& stats);
// Per-element unknowns before condensation. Throws std::invalid_argument for HHO.
RationalPolynomial ndof_total_poly(Method method, const TopologyStats& stats);

RationalPolynomial metric_poly(Method method, Metric metric, const TopologyStats& stats);

// Exact value at k; throws std::invalid_argument for k < 1.
Rational evaluate(const RationalPolynomial& poly, int k);

// Published neighbourhood tables for the builtin meshes. `printed` is verbatim, 3D tables
// lack the cell column. `implied` applies the substitutions listed below.
TopologyStats published_fixture(BuiltinMeshId mesh, FixtureVariant variant);

struct FixtureSubstitution {
  BuiltinMeshId mesh;
  std::string location;  // class label plus field, e.g. "(Fa,1) Nb(Fa)"
  Rational printed;
  Rational implied;
};

const std::vector<FixtureSubstitution>& implied_substitutions();

}  // namespace polysparse
