#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysparse/builtin_meshes.hpp"
#include "polysparse/dof_model.hpp"
#include "polysparse/formula_engine.hpp"
#include "polysparse/periodic_complex.hpp"
#include "polysparse/report.hpp"
#include "polysparse/topology_stats.hpp"

namespace polysparse {

// A published value that disagrees with the mesh.
struct ErrataEntry {
  std::string mesh;
  std::string location;  // "(V,1) Nb(Fa)" or "(V,2) R"
  Rational printed;
  Rational derived;
  // Method/metric rows whose polynomial changes when only this entry is corrected, with
  // the first k at which the values differ, e.g. "VEM nnze (k >= 2)".
  std::vector<std::string> effect;
};

struct FixtureInvariant {
  std::string fixture;  // "printed" or "implied"
  std::string check;    // "pair (0,1)" or "euler per element"
  Rational lhs;
  Rational rhs;
  bool passed = true;
};

struct SubstitutionCheck {
  FixtureSubstitution substitution;
  std::optional<Rational> derived;
};

struct NamedCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct OracleCheck {
  Method method;
  int k = 1;
  Rational formula_ncdof;
  Rational oracle_ncdof;
  Rational formula_nnze;
  Rational oracle_nnze;
  bool passed() const { return formula_ncdof == oracle_ncdof && formula_nnze == oracle_nnze; }
};

struct VerifyResult {
  std::string mesh;
  int tiling = 3;
  int k_min = 1;
  int k_max = 10;
  TopologyStats stats;
  std::vector<NamedCheck> invariants;
  std::vector<OracleCheck> oracle;
  bool has_fixture = false;
  std::vector<ErrataEntry> errata;
  std::vector<SubstitutionCheck> substitutions;
  std::vector<FixtureInvariant> fixture_invariants;

  int oracle_passed() const;
  bool formula_matches_oracle() const { return oracle_passed() == static_cast<int>(oracle.size()); }
};

// Errata of a published fixture against mesh-derived stats, with downstream effects.
std::vector<ErrataEntry> find_errata(const TopologyStats& published, const TopologyStats& derived);

// Pair symmetry and per-element Euler characteristic of a fixture.
std::vector<FixtureInvariant> fixture_invariants(const TopologyStats& fixture, const std::string& name);

// Runs mesh invariants, oracle equivalence at `tiling` (stability against tiling + 1) and,
// for builtin meshes, the fixture comparison.
VerifyResult run_verify(const PeriodicCellComplex& complex, std::optional<BuiltinMeshId> builtin_id, int tiling,
                        int k_min, int k_max);

std::string render_verify(const VerifyResult& result, Format format);

}  // namespace polysparse
