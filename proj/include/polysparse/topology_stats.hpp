#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysparse/periodic_complex.hpp"
#include "polysparse/rational.hpp"
#include "polysparse/torus.hpp"

namespace polysparse {

enum class Derivation { mesh_derived, fixture_printed, fixture_implied };

std::string to_string(Derivation d);

// Short entity names by dimension: V, Ed, Fa, C.
std::string entity_name(int dim);

// Entities of one dimension with identical neighbour-count signature.
struct TopologyClass {
  int dim = 0;
  int index = 1;  // 1-based within dim
  std::vector<std::string> members;
  // nb[m]: distinct dim-m entities sharing an element with a class entity, self included
  // at m == dim. Empty when a published table leaves the column out.
  std::vector<std::optional<std::int64_t>> nb;
  Rational ratio;  // class entities per element

  std::string label() const;  // "(V,1)"
  std::int64_t nb_at(int m) const;  // throws std::invalid_argument when missing
};

struct TopologyStats {
  std::string mesh;
  int dimension = 0;
  std::vector<TopologyClass> classes;
  Derivation derivation = Derivation::mesh_derived;

  std::vector<const TopologyClass*> of_dim(int m) const;
  const TopologyClass* find(int dim, int index) const;
  Rational ratio_sum(int m) const;
};

// Distinct dim-m entities sharing an element with `entity` (self included at equal dim).
std::int64_t neighbor_count(const TorusComplex& torus, const TorusEntity& entity, int m);

// Groups orbits by (dim, Nb) measured on probe tilings p and p+1; the signatures must
// agree or UnstableClassification is thrown. Classes are numbered within a dimension by
// the first declared member orbit.
TopologyStats classify(const PeriodicCellComplex& complex, int probe_tiling = 4);

struct PairSymmetryEntry {
  int p = 0;
  int q = 0;
  Rational lhs;  // sum over dim-p classes of R * Nb(q)
  Rational rhs;  // sum over dim-q classes of R * Nb(p)
  bool skipped = false;  // some Nb value is missing
  bool passed() const { return skipped || lhs == rhs; }
};

struct PairSymmetryReport {
  std::vector<PairSymmetryEntry> entries;
  bool ok() const;
};

PairSymmetryReport pair_symmetry_check(const TopologyStats& stats);

// Per-element Euler characteristic implied by the R column.
Rational euler_per_element(const TopologyStats& stats);

struct TopologyReport {
  std::string mesh;
  Derivation derivation = Derivation::mesh_derived;
  std::vector<std::string> columns;  // "class", V, Ed, ..., "R"
  std::vector<std::vector<std::string>> rows;
};

// Rows in dimension then class-index order; missing values render as "-".
TopologyReport topology_report(const TopologyStats& stats);

}  // namespace polysparse
