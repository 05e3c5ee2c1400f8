#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polysparse/dof_model.hpp"
#include "polysparse/periodic_complex.hpp"
#include "polysparse/rational.hpp"
#include "polysparse/torus.hpp"

namespace polysparse {

// Contiguous dof range of one coupling entity.
struct DofBlock {
  TorusEntity entity;
  std::int64_t first = 0;
  std::int64_t size = 0;
};

// Coupling unknowns of a torus, one block per entity that carries any: elements for
// DG/TDG, facets for HDG/HHO, entities of dimension < d for VEM. Default order is
// dimension, orbit, cell.
class GlobalDofMap {
 public:
  Method method() const { return method_; }
  int k() const { return k_; }
  const TorusComplex& torus() const { return *torus_; }
  const std::vector<DofBlock>& blocks() const { return blocks_; }
  std::int64_t total() const { return total_; }

  // Block index of an entity, or -1 when it carries no coupling unknowns.
  std::int64_t block_of(const TorusEntity& e) const;
  // Dimensions whose entities may carry coupling unknowns.
  const std::vector<int>& coupling_dims() const { return dims_; }

  // Same blocks renumbered: new position i holds old block order[i].
  GlobalDofMap permuted(std::span<const std::size_t> order) const;

 private:
  friend GlobalDofMap enumerate_coupling_dofs(const TorusComplex& torus, Method method, int k);
  void reindex();

  Method method_ = Method::DG;
  int k_ = 1;
  const TorusComplex* torus_ = nullptr;
  std::vector<DofBlock> blocks_;
  std::vector<std::vector<std::int64_t>> block_index_;  // per dim, per entity
  std::vector<int> dims_;
  std::int64_t total_ = 0;
};

// The torus must outlive the returned map. Throws std::invalid_argument for k < 1.
GlobalDofMap enumerate_coupling_dofs(const TorusComplex& torus, Method method, int k);

// Block-level coupling pattern. Scalar entries follow from block sizes: a block pair
// (a, b) stands for size_a * size_b entries.
struct CouplingPattern {
  std::int64_t dofs = 0;
  std::int64_t nnz = 0;
  std::vector<std::int64_t> block_first;
  std::vector<std::int64_t> block_size;
  // Sorted, both orientations, diagonal included. Absent when only counts were kept.
  std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs;
};

// Serial reference: builds the explicit block-pair set. DG/TDG couple an element to
// itself and to elements sharing a facet; the other methods couple any two entities
// lying in a common element.
CouplingPattern coupling_pattern(const GlobalDofMap& map);
CouplingPattern coupling_pattern(const TorusComplex& torus, Method method, int k);

bool pattern_symmetric(const CouplingPattern& pattern);
bool diagonal_blocks_complete(const CouplingPattern& pattern);

struct OracleCounts {
  std::int64_t elements = 0;
  std::int64_t dofs = 0;
  std::int64_t nnz = 0;
  Rational ncdof_per_element;
  Rational nnze_per_element;
};

// Counts on an explicit torus, no tiling requirement.
OracleCounts torus_counts(const TorusComplex& torus, Method method, int k);
// Requires every tiling count >= 3 (std::invalid_argument otherwise).
OracleCounts oracle_counts(const PeriodicCellComplex& complex, Method method, int k, int tiling);

struct StabilityResult {
  bool passed = false;
  int n1 = 0;
  int n2 = 0;
  Rational nnze1;
  Rational nnze2;
};

StabilityResult stability_check(const PeriodicCellComplex& complex, Method method, int k, int n1, int n2);

// All unknowns before condensation, element interiors included. HHO throws.
std::int64_t total_unknowns(const TorusComplex& torus, Method method, int k);

// Matrix Market coordinate pattern, 1-based, sorted by row then column. Requires the
// explicit pair set (std::invalid_argument otherwise).
void write_matrix_market(const CouplingPattern& pattern, std::ostream& out);
// Throws WriteError when the file cannot be written.
void export_pattern(const CouplingPattern& pattern, const std::string& path);

}  // namespace polysparse
