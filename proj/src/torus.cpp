#include "polysparse/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace polysparse {

std::size_t TorusComplex::cell_index(const OffsetVector& coords) const {
  std::size_t idx = 0;
  for (int axis = 0; axis < dimension(); ++axis) {
    const int n = tiling_[static_cast<std::size_t>(axis)];
    const int c = ((coords[axis] % n) + n) % n;
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
  }
  return idx;
}

OffsetVector TorusComplex::cell_coords(std::size_t cell) const {
  OffsetVector coords(dimension());
  for (int axis = dimension() - 1; axis >= 0; --axis) {
    const auto n = static_cast<std::size_t>(tiling_[static_cast<std::size_t>(axis)]);
    coords[axis] = static_cast<int>(cell % n);
    cell /= n;
  }
  return coords;
}

std::span<const std::uint32_t> TorusComplex::boundary(const TorusEntity& e) const {
  if (e.dim <= 0) return {};
  return boundary_.at(static_cast<std::size_t>(e.dim)).row(e.index);
}

std::span<const std::uint32_t> TorusComplex::element_closure(std::size_t element, int m) const {
  return element_closure_.at(static_cast<std::size_t>(m)).row(element);
}

std::span<const std::uint32_t> TorusComplex::star(const TorusEntity& e) const {
  if (e.dim < 0 || e.dim > dimension() || e.index >= count(e.dim)) {
    throw std::out_of_range("entity not in torus");
  }
  return star_[static_cast<std::size_t>(e.dim)].row(e.index);
}

std::vector<std::vector<std::uint32_t>> TorusComplex::closure(const TorusEntity& e) const {
  std::vector<std::vector<std::uint32_t>> result(static_cast<std::size_t>(e.dim) + 1);
  result[static_cast<std::size_t>(e.dim)] = {static_cast<std::uint32_t>(e.index)};
  for (int m = e.dim; m > 0; --m) {
    auto& next = result[static_cast<std::size_t>(m - 1)];
    for (auto idx : result[static_cast<std::size_t>(m)]) {
      auto b = boundary({m, idx});
      next.insert(next.end(), b.begin(), b.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }
  return result;
}

int TorusComplex::facet_incidences(std::size_t facet) const { return facet_uses_.at(facet); }

long TorusComplex::euler_characteristic() const {
  long chi = 0;
  for (int m = 0; m <= dimension(); ++m) chi += (m % 2 == 0 ? 1 : -1) * static_cast<long>(count(m));
  return chi;
}

TorusComplex tile(const PeriodicCellComplex& complex, std::span<const int> n) {
  const int d = complex.dimension();
  if (static_cast<int>(n.size()) != d) {
    throw std::invalid_argument("tiling needs " + std::to_string(d) + " per-axis counts");
  }
  for (int ni : n) {
    if (ni < 1) throw std::invalid_argument("tiling counts must be >= 1");
  }

  TorusComplex torus(complex);
  torus.tiling_.assign(n.begin(), n.end());
  torus.cells_ = 1;
  for (int ni : n) torus.cells_ *= static_cast<std::size_t>(ni);
  const std::size_t cells = torus.cells_;

  torus.boundary_.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 1; m <= d; ++m) {
    auto& csr = torus.boundary_[static_cast<std::size_t>(m)];
    for (auto orbit : complex.orbits_of_dim(m)) {
      for (std::size_t cell = 0; cell < cells; ++cell) {
        const OffsetVector base = torus.cell_coords(cell);
        for (const auto& b : complex.boundary(orbit)) {
          const auto target = torus.entity_index(m - 1, complex.local_index(b.orbit), torus.cell_index(base + b.offset));
          csr.values.push_back(static_cast<std::uint32_t>(target));
        }
        csr.offsets.push_back(static_cast<std::uint32_t>(csr.values.size()));
      }
    }
  }

  // Element closures come from the orbit-level closure shifted by the cell; wrap-around
  // may merge distinct infinite-mesh entities, hence the sort/unique.
  torus.element_closure_.resize(static_cast<std::size_t>(d) + 1);
  for (auto orbit : complex.orbits_of_dim(d)) {
    const Closure cl = closure_at(complex, orbit);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      const OffsetVector base = torus.cell_coords(cell);
      for (int m = 0; m <= d; ++m) {
        auto& csr = torus.element_closure_[static_cast<std::size_t>(m)];
        const auto start = csr.values.size();
        for (const auto& oc : cl[static_cast<std::size_t>(m)]) {
          const auto idx = torus.entity_index(m, complex.local_index(oc.orbit), torus.cell_index(base + oc.offset));
          csr.values.push_back(static_cast<std::uint32_t>(idx));
        }
        std::sort(csr.values.begin() + static_cast<std::ptrdiff_t>(start), csr.values.end());
        csr.values.erase(std::unique(csr.values.begin() + static_cast<std::ptrdiff_t>(start), csr.values.end()),
                         csr.values.end());
        csr.offsets.push_back(static_cast<std::uint32_t>(csr.values.size()));
      }
    }
  }

  torus.star_.resize(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    std::vector<std::vector<std::uint32_t>> rows(torus.count(m));
    for (std::size_t el = 0; el < torus.element_count(); ++el) {
      for (auto e : torus.element_closure(el, m)) rows[e].push_back(static_cast<std::uint32_t>(el));
    }
    auto& csr = torus.star_[static_cast<std::size_t>(m)];
    for (auto& row : rows) {
      csr.values.insert(csr.values.end(), row.begin(), row.end());
      csr.offsets.push_back(static_cast<std::uint32_t>(csr.values.size()));
    }
  }

  torus.facet_uses_.assign(torus.count(d - 1), 0);
  for (std::size_t el = 0; el < torus.element_count(); ++el) {
    for (auto f : torus.boundary({d, el})) ++torus.facet_uses_[f];
  }
  return torus;
}

TorusComplex tile(const PeriodicCellComplex& complex, int n_per_axis) {
  std::vector<int> n(static_cast<std::size_t>(complex.dimension()), n_per_axis);
  return tile(complex, n);
}

}  // namespace polysparse
