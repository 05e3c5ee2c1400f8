#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polysparse/periodic_complex.hpp"

namespace polysparse {

// A concrete entity of a torus tiling: dimension plus index among the dim-m entities.
// Index layout: local_orbit * cell_count + cell, cells in lexicographic order.
struct TorusEntity {
  int dim = 0;
  std::size_t index = 0;

  friend bool operator==(const TorusEntity&, const TorusEntity&) = default;
};

// Finite tiling Z_{n_1} x ... x Z_{n_d} of a periodic unit cell. Boundary incidence of
// ((orbit, cell), (o', off)) targets (o', (cell + off) mod n). Immutable; holds its own
// copy of the unit cell.
class TorusComplex {
 public:
  const PeriodicCellComplex& base() const { return base_; }
  int dimension() const { return base_.dimension(); }
  const std::vector<int>& tiling() const { return tiling_; }
  std::size_t cell_count() const { return cells_; }
  std::size_t count(int m) const { return base_.count(m) * cells_; }
  std::size_t element_count() const { return count(dimension()); }

  std::size_t cell_index(const OffsetVector& coords) const;  // wraps modulo the tiling
  OffsetVector cell_coords(std::size_t cell) const;
  std::size_t entity_index(int /*dim*/, std::size_t local_orbit, std::size_t cell) const {
    return local_orbit * cells_ + cell;
  }
  std::size_t local_orbit_of(std::size_t index) const { return index / cells_; }
  std::size_t cell_of(std::size_t index) const { return index % cells_; }

  // Codimension-1 boundary with multiplicity, as indices of dim-1 entities.
  std::span<const std::uint32_t> boundary(const TorusEntity& e) const;
  // Sorted distinct dim-m entities in the closure of an element.
  std::span<const std::uint32_t> element_closure(std::size_t element, int m) const;
  // Sorted distinct elements whose closure contains the entity.
  std::span<const std::uint32_t> star(const TorusEntity& e) const;

  // Closure of any entity by recursive descent through boundary(); per dim, sorted.
  std::vector<std::vector<std::uint32_t>> closure(const TorusEntity& e) const;

  // Number of boundary references from elements to a facet, counted with multiplicity.
  int facet_incidences(std::size_t facet) const;

  long euler_characteristic() const;

 private:
  friend TorusComplex tile(const PeriodicCellComplex& complex, std::span<const int> n);
  explicit TorusComplex(PeriodicCellComplex base) : base_(std::move(base)) {}

  struct Csr {
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint32_t> values;
    std::span<const std::uint32_t> row(std::size_t i) const {
      return {values.data() + offsets[i], values.data() + offsets[i + 1]};
    }
  };

  PeriodicCellComplex base_;
  std::vector<int> tiling_;
  std::size_t cells_ = 1;
  std::vector<Csr> boundary_;         // per dim
  std::vector<Csr> element_closure_;  // per target dim, rows = elements
  std::vector<Csr> star_;             // per dim, rows = entities
  std::vector<int> facet_uses_;
};

// Throws std::invalid_argument when the tiling has the wrong length or a count < 1.
TorusComplex tile(const PeriodicCellComplex& complex, std::span<const int> n);
TorusComplex tile(const PeriodicCellComplex& complex, int n_per_axis);

}  // namespace polysparse
