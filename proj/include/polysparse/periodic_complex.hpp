#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polysparse/errors.hpp"

namespace polysparse {

// Integer lattice translation in unit-cell units. Length equals the ambient dimension.
class OffsetVector {
 public:
  static constexpr int kMaxDim = 3;

  OffsetVector() = default;
  explicit OffsetVector(int dim);
  OffsetVector(std::initializer_list<int> coords);
  static OffsetVector from(std::span<const int> coords);

  int dim() const { return dim_; }
  int operator[](int axis) const { return c_[static_cast<std::size_t>(axis)]; }
  int& operator[](int axis) { return c_[static_cast<std::size_t>(axis)]; }
  bool is_zero() const;

  OffsetVector& operator+=(const OffsetVector& rhs);
  OffsetVector& operator-=(const OffsetVector& rhs);
  friend OffsetVector operator+(OffsetVector a, const OffsetVector& b) { return a += b; }
  friend OffsetVector operator-(OffsetVector a, const OffsetVector& b) { return a -= b; }

  friend bool operator==(const OffsetVector&, const OffsetVector&) = default;
  friend auto operator<=>(const OffsetVector&, const OffsetVector&) = default;

  std::string str() const;

 private:
  std::array<int, kMaxDim> c_{};
  int dim_ = 0;
};

struct BoundaryRef {
  std::string of;
  OffsetVector offset;

  friend bool operator==(const BoundaryRef&, const BoundaryRef&) = default;
};

// One unit-cell entity standing for all of its lattice translates. `boundary` lists the
// codimension-1 entities with multiplicity; orientation is not recorded.
struct EntityOrbit {
  std::string id;
  int dim = 0;
  std::vector<BoundaryRef> boundary;

  friend bool operator==(const EntityOrbit&, const EntityOrbit&) = default;
};

// An orbit reference with resolved index: (orbit, translate).
struct OrbitCell {
  std::size_t orbit = 0;
  OffsetVector offset;

  friend bool operator==(const OrbitCell&, const OrbitCell&) = default;
  friend auto operator<=>(const OrbitCell&, const OrbitCell&) = default;
};

// Unit cell of a periodic polytopal mesh. Immutable once constructed. Construction
// checks structural well-formedness (references, dimensions, offset lengths) and throws
// MeshError; topological validity is reported by validate().
class PeriodicCellComplex {
 public:
  PeriodicCellComplex(std::string name, int dimension, std::vector<EntityOrbit> orbits);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  const std::vector<EntityOrbit>& orbits() const { return orbits_; }
  const EntityOrbit& orbit(std::size_t index) const { return orbits_.at(index); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  // Global orbit indices of dimension m, in declaration order.
  const std::vector<std::size_t>& orbits_of_dim(int m) const;
  std::size_t count(int m) const { return orbits_of_dim(m).size(); }
  // Position of a global orbit index among the orbits of its dimension.
  std::size_t local_index(std::size_t orbit) const { return local_index_.at(orbit); }

  std::span<const OrbitCell> boundary(std::size_t orbit) const { return resolved_.at(orbit); }

  friend bool operator==(const PeriodicCellComplex& a, const PeriodicCellComplex& b) {
    return a.name_ == b.name_ && a.dimension_ == b.dimension_ && a.orbits_ == b.orbits_;
  }

 private:
  std::string name_;
  int dimension_;
  std::vector<EntityOrbit> orbits_;
  std::vector<std::vector<OrbitCell>> resolved_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::vector<std::size_t> local_index_;
  std::unordered_map<std::string, std::size_t> ids_;
};

// Full downward closure of one orbit, per dimension 0..dim(orbit): distinct
// (orbit, summed offset) pairs, sorted. The orbit itself appears at its own dimension
// with zero offset.
using Closure = std::vector<std::vector<OrbitCell>>;

Closure closure(const PeriodicCellComplex& complex, std::string_view orbit_id);
Closure closure_at(const PeriodicCellComplex& complex, std::size_t orbit);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(std::string_view name) const;
  // One line per failed check.
  std::string failures() const;
};

// Checks: boundary-references, element-and-facet-orbits, facet-rule,
// euler-characteristic, closure-consistency.
ValidationReport validate(const PeriodicCellComplex& complex);

// Alternating sum of orbit counts.
long euler_characteristic(const PeriodicCellComplex& complex);

// Mesh file schema (JSON). parse_mesh throws MeshError on schema violations, structural
// errors, and failed validation.
PeriodicCellComplex parse_mesh(std::string_view document);
PeriodicCellComplex load_mesh(const std::string& path);
std::string serialize_mesh(const PeriodicCellComplex& complex);

}  // namespace polysparse
