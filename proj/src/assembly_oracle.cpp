#include "polysparse/assembly_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polysparse/coupling_kernels.hpp"
#include "polysparse/errors.hpp"

namespace polysparse {

std::int64_t GlobalDofMap::block_of(const TorusEntity& e) const {
  const auto dim = static_cast<std::size_t>(e.dim);
  if (dim >= block_index_.size() || e.index >= block_index_[dim].size()) return -1;
  return block_index_[dim][e.index];
}

void GlobalDofMap::reindex() {
  const auto d = static_cast<std::size_t>(torus_->dimension());
  block_index_.assign(d + 1, {});
  for (std::size_t m = 0; m <= d; ++m) block_index_[m].assign(torus_->count(static_cast<int>(m)), -1);
  total_ = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    b.first = total_;
    total_ += b.size;
    block_index_[static_cast<std::size_t>(b.entity.dim)][b.entity.index] = static_cast<std::int64_t>(i);
  }
}

GlobalDofMap GlobalDofMap::permuted(std::span<const std::size_t> order) const {
  if (order.size() != blocks_.size()) throw std::invalid_argument("permutation length does not match block count");
  std::vector<bool> used(blocks_.size(), false);
  GlobalDofMap out = *this;
  out.blocks_.clear();
  for (auto i : order) {
    if (i >= blocks_.size() || used[i]) throw std::invalid_argument("not a permutation");
    used[i] = true;
    out.blocks_.push_back(blocks_[i]);
  }
  out.reindex();
  return out;
}

GlobalDofMap enumerate_coupling_dofs(const TorusComplex& torus, Method method, int k) {
  if (k < 1) throw std::invalid_argument("degree k must be >= 1, got " + std::to_string(k));
  const int d = torus.dimension();
  GlobalDofMap map;
  map.method_ = method;
  map.k_ = k;
  map.torus_ = &torus;
  if (is_element_method(method)) {
    map.dims_ = {d};
  } else if (is_facet_method(method)) {
    map.dims_ = {d - 1};
  } else {
    for (int m = 0; m < d; ++m) map.dims_.push_back(m);
  }
  for (int m : map.dims_) {
    DofRole role = DofRole::sub(m);
    if (is_element_method(method)) role = DofRole::element();
    if (is_facet_method(method)) role = DofRole::facet();
    const auto size = local_ndof(method, role, d, k);
    if (size == 0) continue;
    for (std::size_t i = 0; i < torus.count(m); ++i) map.blocks_.push_back({{m, i}, 0, size});
  }
  map.reindex();
  return map;
}

namespace {

using BlockPair = std::pair<std::uint32_t, std::uint32_t>;

void add_clique(std::vector<BlockPair>& pairs, const std::vector<std::uint32_t>& members) {
  for (auto a : members) {
    for (auto b : members) pairs.emplace_back(a, b);
  }
}

}  // namespace

CouplingPattern coupling_pattern(const GlobalDofMap& map) {
  const TorusComplex& torus = map.torus();
  const int d = torus.dimension();
  std::vector<BlockPair> pairs;
  std::vector<std::uint32_t> members;

  if (is_element_method(map.method())) {
    if (!map.blocks().empty()) {
      for (std::size_t f = 0; f < torus.count(d - 1); ++f) {
        members.clear();
        for (auto el : torus.star({d - 1, f})) members.push_back(static_cast<std::uint32_t>(map.block_of({d, el})));
        add_clique(pairs, members);
      }
      for (std::size_t b = 0; b < map.blocks().size(); ++b) {
        pairs.emplace_back(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b));
      }
    }
  } else {
    for (std::size_t el = 0; el < torus.element_count(); ++el) {
      members.clear();
      for (int m : map.coupling_dims()) {
        for (auto e : torus.element_closure(el, m)) {
          const auto b = map.block_of({m, e});
          if (b >= 0) members.push_back(static_cast<std::uint32_t>(b));
        }
      }
      add_clique(pairs, members);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  CouplingPattern pattern;
  pattern.dofs = map.total();
  for (const auto& b : map.blocks()) {
    pattern.block_first.push_back(b.first);
    pattern.block_size.push_back(b.size);
  }
  for (const auto& [a, b] : pairs) pattern.nnz += pattern.block_size[a] * pattern.block_size[b];
  pattern.pairs = std::move(pairs);
  return pattern;
}

CouplingPattern coupling_pattern(const TorusComplex& torus, Method method, int k) {
  return coupling_pattern(enumerate_coupling_dofs(torus, method, k));
}

namespace {

const std::vector<BlockPair>& explicit_pairs(const CouplingPattern& pattern) {
  if (!pattern.pairs) throw std::invalid_argument("pattern has no explicit pair set");
  return *pattern.pairs;
}

}  // namespace

bool pattern_symmetric(const CouplingPattern& pattern) {
  const auto& pairs = explicit_pairs(pattern);
  return std::all_of(pairs.begin(), pairs.end(), [&](const BlockPair& p) {
    return std::binary_search(pairs.begin(), pairs.end(), BlockPair{p.second, p.first});
  });
}

bool diagonal_blocks_complete(const CouplingPattern& pattern) {
  const auto& pairs = explicit_pairs(pattern);
  for (std::uint32_t b = 0; b < pattern.block_size.size(); ++b) {
    if (!std::binary_search(pairs.begin(), pairs.end(), BlockPair{b, b})) return false;
  }
  return true;
}

OracleCounts torus_counts(const TorusComplex& torus, Method method, int k) {
  const auto map = enumerate_coupling_dofs(torus, method, k);
  OracleCounts c;
  c.elements = static_cast<std::int64_t>(torus.element_count());
  c.dofs = map.total();
  c.nnz = count_nnz(map);
  c.ncdof_per_element = Rational(c.dofs, c.elements);
  c.nnze_per_element = Rational(c.nnz, c.elements);
  return c;
}

OracleCounts oracle_counts(const PeriodicCellComplex& complex, Method method, int k, int tiling) {
  if (tiling < 3) throw std::invalid_argument("oracle tiling must be at least 3 per axis");
  const TorusComplex torus = tile(complex, tiling);
  return torus_counts(torus, method, k);
}

StabilityResult stability_check(const PeriodicCellComplex& complex, Method method, int k, int n1, int n2) {
  StabilityResult r;
  r.n1 = n1;
  r.n2 = n2;
  r.nnze1 = torus_counts(tile(complex, n1), method, k).nnze_per_element;
  r.nnze2 = torus_counts(tile(complex, n2), method, k).nnze_per_element;
  r.passed = r.nnze1 == r.nnze2;
  return r;
}

std::int64_t total_unknowns(const TorusComplex& torus, Method method, int k) {
  const int d = torus.dimension();
  const auto elements = static_cast<std::int64_t>(torus.element_count());
  const auto interior = interior_ndof(method, d, k);
  if (is_element_method(method)) return elements * interior;
  std::int64_t total = elements * interior;
  if (is_facet_method(method)) {
    return total + static_cast<std::int64_t>(torus.count(d - 1)) * local_ndof(method, DofRole::facet(), d, k);
  }
  for (int m = 0; m < d; ++m) {
    total += static_cast<std::int64_t>(torus.count(m)) * local_ndof(method, DofRole::sub(m), d, k);
  }
  return total;
}

void write_matrix_market(const CouplingPattern& pattern, std::ostream& out) {
  const auto& pairs = explicit_pairs(pattern);
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << pattern.dofs << ' ' << pattern.dofs << ' ' << pattern.nnz << '\n';
  std::string line;
  for (std::size_t begin = 0; begin < pairs.size();) {
    const auto a = pairs[begin].first;
    std::size_t end = begin;
    while (end < pairs.size() && pairs[end].first == a) ++end;
    for (std::int64_t i = 0; i < pattern.block_size[a]; ++i) {
      const auto row = pattern.block_first[a] + i + 1;
      for (std::size_t p = begin; p < end; ++p) {
        const auto b = pairs[p].second;
        for (std::int64_t j = 0; j < pattern.block_size[b]; ++j) {
          line = std::to_string(row);
          line += ' ';
          line += std::to_string(pattern.block_first[b] + j + 1);
          line += '\n';
          out << line;
        }
      }
    }
    begin = end;
  }
}

void export_pattern(const CouplingPattern& pattern, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open '" + path + "' for writing");
  write_matrix_market(pattern, file);
  file.flush();
  if (!file) throw WriteError("write to '" + path + "' failed");
}

}  // namespace polysparse
