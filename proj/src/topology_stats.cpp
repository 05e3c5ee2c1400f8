#include "polysparse/topology_stats.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polysparse {

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::mesh_derived: return "mesh-derived";
    case Derivation::fixture_printed: return "fixture-printed";
    case Derivation::fixture_implied: return "fixture-implied";
  }
  return "unknown";
}

std::string entity_name(int dim) {
  static const char* names[] = {"V", "Ed", "Fa", "C"};
  if (dim < 0 || dim > 3) throw std::invalid_argument("entity dimension out of range");
  return names[dim];
}

std::string TopologyClass::label() const { return "(" + entity_name(dim) + "," + std::to_string(index) + ")"; }

std::int64_t TopologyClass::nb_at(int m) const {
  if (m < 0 || static_cast<std::size_t>(m) >= nb.size() || !nb[static_cast<std::size_t>(m)]) {
    throw std::invalid_argument("class " + label() + " has no neighbour count for " + entity_name(m));
  }
  return *nb[static_cast<std::size_t>(m)];
}

std::vector<const TopologyClass*> TopologyStats::of_dim(int m) const {
  std::vector<const TopologyClass*> out;
  for (const auto& c : classes) {
    if (c.dim == m) out.push_back(&c);
  }
  return out;
}

const TopologyClass* TopologyStats::find(int dim, int index) const {
  for (const auto& c : classes) {
    if (c.dim == dim && c.index == index) return &c;
  }
  return nullptr;
}

Rational TopologyStats::ratio_sum(int m) const {
  Rational sum;
  for (const auto* c : of_dim(m)) sum += c->ratio;
  return sum;
}

std::int64_t neighbor_count(const TorusComplex& torus, const TorusEntity& entity, int m) {
  if (m < 0 || m > torus.dimension()) throw std::invalid_argument("neighbour dimension out of range");
  std::vector<std::uint32_t> seen;
  for (auto el : torus.star(entity)) {
    auto cl = torus.element_closure(el, m);
    seen.insert(seen.end(), cl.begin(), cl.end());
  }
  std::sort(seen.begin(), seen.end());
  return std::unique(seen.begin(), seen.end()) - seen.begin();
}

namespace {

using Signature = std::vector<std::int64_t>;

// Signature of every orbit at its cell-0 representative, indexed by global orbit.
std::vector<Signature> signatures(const PeriodicCellComplex& complex, int n) {
  const TorusComplex torus = tile(complex, n);
  const int d = complex.dimension();
  const auto count = static_cast<long>(complex.orbits().size());
  std::vector<Signature> sig(complex.orbits().size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto orbit = static_cast<std::size_t>(i);
    const int dim = complex.orbit(orbit).dim;
    const TorusEntity rep{dim, torus.entity_index(dim, complex.local_index(orbit), 0)};
    Signature s;
    for (int m = 0; m <= d; ++m) s.push_back(neighbor_count(torus, rep, m));
    sig[orbit] = std::move(s);
  }
  return sig;
}

}  // namespace

TopologyStats classify(const PeriodicCellComplex& complex, int probe_tiling) {
  if (probe_tiling < 3) throw std::invalid_argument("probe tiling must be at least 3");
  const auto a = signatures(complex, probe_tiling);
  const auto b = signatures(complex, probe_tiling + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      throw UnstableClassification("classification of orbit '" + complex.orbit(i).id + "' differs between tilings " +
                                   std::to_string(probe_tiling) + " and " + std::to_string(probe_tiling + 1));
    }
  }

  const int d = complex.dimension();
  const auto elements = static_cast<std::int64_t>(complex.count(d));
  TopologyStats stats;
  stats.mesh = complex.name();
  stats.dimension = d;
  stats.derivation = Derivation::mesh_derived;
  for (int m = 0; m <= d; ++m) {
    std::vector<TopologyClass> dim_classes;
    for (auto orbit : complex.orbits_of_dim(m)) {
      auto it = std::find_if(dim_classes.begin(), dim_classes.end(), [&](const TopologyClass& c) {
        for (int p = 0; p <= d; ++p) {
          if (*c.nb[static_cast<std::size_t>(p)] != a[orbit][static_cast<std::size_t>(p)]) return false;
        }
        return true;
      });
      if (it == dim_classes.end()) {
        TopologyClass c;
        c.dim = m;
        c.index = static_cast<int>(dim_classes.size()) + 1;
        for (auto v : a[orbit]) c.nb.emplace_back(v);
        dim_classes.push_back(std::move(c));
        it = dim_classes.end() - 1;
      }
      it->members.push_back(complex.orbit(orbit).id);
    }
    for (auto& c : dim_classes) {
      c.ratio = Rational(static_cast<std::int64_t>(c.members.size()), elements);
      stats.classes.push_back(std::move(c));
    }
  }
  return stats;
}

bool PairSymmetryReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

PairSymmetryReport pair_symmetry_check(const TopologyStats& stats) {
  PairSymmetryReport report;
  auto side = [&](int from, int to, bool& missing) {
    Rational sum;
    for (const auto* c : stats.of_dim(from)) {
      const auto& v = static_cast<std::size_t>(to) < c->nb.size() ? c->nb[static_cast<std::size_t>(to)]
                                                                   : std::optional<std::int64_t>{};
      if (!v) {
        missing = true;
        continue;
      }
      sum += c->ratio * Rational(*v);
    }
    return sum;
  };
  for (int p = 0; p <= stats.dimension; ++p) {
    for (int q = p + 1; q <= stats.dimension; ++q) {
      PairSymmetryEntry e;
      e.p = p;
      e.q = q;
      bool missing = false;
      e.lhs = side(p, q, missing);
      e.rhs = side(q, p, missing);
      e.skipped = missing;
      report.entries.push_back(e);
    }
  }
  return report;
}

Rational euler_per_element(const TopologyStats& stats) {
  Rational chi;
  for (int m = 0; m <= stats.dimension; ++m) {
    chi += (m % 2 == 0 ? stats.ratio_sum(m) : -stats.ratio_sum(m));
  }
  return chi;
}

TopologyReport topology_report(const TopologyStats& stats) {
  TopologyReport report;
  report.mesh = stats.mesh;
  report.derivation = stats.derivation;
  report.columns.push_back("class");
  for (int m = 0; m <= stats.dimension; ++m) report.columns.push_back(entity_name(m));
  report.columns.push_back("R");

  std::vector<const TopologyClass*> order;
  for (const auto& c : stats.classes) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    return std::pair(x->dim, x->index) < std::pair(y->dim, y->index);
  });
  for (const auto* c : order) {
    std::vector<std::string> row{c->label()};
    for (int m = 0; m <= stats.dimension; ++m) {
      const auto i = static_cast<std::size_t>(m);
      row.push_back(i < c->nb.size() && c->nb[i] ? std::to_string(*c->nb[i]) : "-");
    }
    row.push_back(c->ratio.str());
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace polysparse
