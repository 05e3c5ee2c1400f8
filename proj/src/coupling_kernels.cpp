#include "polysparse/coupling_kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polysparse {

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::int64_t count_nnz(const GlobalDofMap& map) {
  const TorusComplex& torus = map.torus();
  const int d = torus.dimension();
  const auto& blocks = map.blocks();
  const auto rows = static_cast<long>(blocks.size());
  const bool by_facet = is_element_method(map.method());
  std::int64_t nnz = 0;

#pragma omp parallel reduction(+ : nnz)
  {
    // stamp[b] == row + 1 marks block b as already counted for this row
    std::vector<long> stamp(blocks.size(), 0);
#pragma omp for schedule(dynamic, 64)
    for (long row = 0; row < rows; ++row) {
      const auto& a = blocks[static_cast<std::size_t>(row)];
      std::int64_t width = 0;
      auto visit = [&](const TorusEntity& e) {
        const auto b = map.block_of(e);
        if (b < 0 || stamp[static_cast<std::size_t>(b)] == row + 1) return;
        stamp[static_cast<std::size_t>(b)] = row + 1;
        width += blocks[static_cast<std::size_t>(b)].size;
      };
      if (by_facet) {
        for (auto f : torus.element_closure(a.entity.index, d - 1)) {
          for (auto el : torus.star({d - 1, f})) visit({d, el});
        }
      } else {
        for (auto el : torus.star(a.entity)) {
          for (int m : map.coupling_dims()) {
            for (auto e : torus.element_closure(el, m)) visit({m, e});
          }
        }
      }
      nnz += a.size * width;
    }
  }
  return nnz;
}

}  // namespace polysparse
