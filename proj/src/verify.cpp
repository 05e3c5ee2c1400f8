#include "polysparse/verify.hpp"

#include <sstream>

#include "json.hpp"
#include "polysparse/assembly_oracle.hpp"
#include "polysparse/torus.hpp"

namespace polysparse {

using nlohmann::ordered_json;

int VerifyResult::oracle_passed() const {
  int n = 0;
  for (const auto& c : oracle) n += c.passed() ? 1 : 0;
  return n;
}

namespace {

constexpr int kEffectScan = 50;

std::vector<std::string> effects(const TopologyStats& before, const TopologyStats& after) {
  std::vector<std::string> out;
  for (auto metric : {Metric::ndof, Metric::ncdof, Metric::nnze}) {
    for (auto method : method_display_order()) {
      if (metric == Metric::ndof && method == Method::HHO) continue;
      const auto a = metric_poly(method, metric, before);
      const auto b = metric_poly(method, metric, after);
      if (a == b) continue;
      for (int k = 1; k <= kEffectScan; ++k) {
        if (evaluate(a, k) != evaluate(b, k)) {
          out.push_back(to_string(method) + " " + to_string(metric) + " (k >= " + std::to_string(k) + ")");
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ErrataEntry> find_errata(const TopologyStats& published, const TopologyStats& derived) {
  std::vector<ErrataEntry> out;
  for (std::size_t ci = 0; ci < published.classes.size(); ++ci) {
    const auto& p = published.classes[ci];
    const auto* dc = derived.find(p.dim, p.index);
    if (dc == nullptr) continue;
    auto record = [&](const std::string& field, const Rational& printed, const Rational& actual, auto apply) {
      if (printed == actual) return;
      TopologyStats fixed = published;
      apply(fixed.classes[ci]);
      out.push_back({published.mesh, p.label() + " " + field, printed, actual, effects(published, fixed)});
    };
    for (int m = 0; m <= published.dimension; ++m) {
      const auto i = static_cast<std::size_t>(m);
      if (!p.nb[i] || !dc->nb[i]) continue;
      record("Nb(" + entity_name(m) + ")", Rational(*p.nb[i]), Rational(*dc->nb[i]),
             [&](TopologyClass& c) { c.nb[i] = dc->nb[i]; });
    }
    record("R", p.ratio, dc->ratio, [&](TopologyClass& c) { c.ratio = dc->ratio; });
  }
  for (int m = 0; m <= published.dimension; ++m) {
    const auto np = published.of_dim(m).size();
    const auto nd = derived.of_dim(m).size();
    if (np != nd) {
      out.push_back({published.mesh, entity_name(m) + " class count", Rational(static_cast<std::int64_t>(np)),
                     Rational(static_cast<std::int64_t>(nd)), {}});
    }
  }
  return out;
}

std::vector<FixtureInvariant> fixture_invariants(const TopologyStats& fixture, const std::string& name) {
  std::vector<FixtureInvariant> out;
  for (const auto& e : pair_symmetry_check(fixture).entries) {
    if (e.skipped) continue;
    out.push_back({name, "pair (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")", e.lhs, e.rhs, e.passed()});
  }
  const auto chi = euler_per_element(fixture);
  out.push_back({name, "euler per element", chi, Rational(0), chi == Rational(0)});
  return out;
}

VerifyResult run_verify(const PeriodicCellComplex& complex, std::optional<BuiltinMeshId> builtin_id, int tiling,
                        int k_min, int k_max) {
  VerifyResult r;
  r.mesh = complex.name();
  r.tiling = tiling;
  r.k_min = k_min;
  r.k_max = k_max;

  for (const auto& c : validate(complex).checks) r.invariants.push_back({c.name, c.passed, c.detail});

  r.stats = classify(complex, tiling);
  {
    // classify already compared tilings n and n+1; add n+1 against n+2
    const auto wider = classify(complex, tiling + 1);
    bool same = wider.classes.size() == r.stats.classes.size();
    for (std::size_t i = 0; same && i < wider.classes.size(); ++i) {
      same = wider.classes[i].nb == r.stats.classes[i].nb && wider.classes[i].ratio == r.stats.classes[i].ratio;
    }
    r.invariants.push_back({"classification-stability", same,
                            "probe tilings " + std::to_string(tiling) + ", " + std::to_string(tiling + 1) + ", " +
                                std::to_string(tiling + 2)});
  }

  const auto sym = pair_symmetry_check(r.stats);
  std::string sym_detail;
  for (const auto& e : sym.entries) {
    if (!e.passed()) sym_detail += "(" + std::to_string(e.p) + "," + std::to_string(e.q) + ") ";
  }
  r.invariants.push_back({"pair-symmetry", sym.ok(), sym_detail});

  const TorusComplex torus = tile(complex, tiling);
  const TorusComplex wider = tile(complex, tiling + 1);
  for (const auto* t : {&torus, &wider}) {
    const auto n = std::to_string(t->tiling().front());
    r.invariants.push_back({"torus-euler n=" + n, t->euler_characteristic() == 0,
                            "chi = " + std::to_string(t->euler_characteristic())});
    bool facets = true;
    for (std::size_t f = 0; f < t->count(t->dimension() - 1); ++f) facets = facets && t->facet_incidences(f) == 2;
    r.invariants.push_back({"torus-facet-rule n=" + n, facets, ""});
  }

  for (auto method : method_display_order()) {
    const auto ncdof = ncdof_poly(method, r.stats);
    const auto nnze = nnze_poly(method, r.stats);
    for (int k = k_min; k <= k_max; ++k) {
      const auto oc = torus_counts(torus, method, k);
      r.oracle.push_back({method, k, evaluate(ncdof, k), oc.ncdof_per_element, evaluate(nnze, k), oc.nnze_per_element});
    }
    const auto a = torus_counts(torus, method, k_max).nnze_per_element;
    const auto b = torus_counts(wider, method, k_max).nnze_per_element;
    r.invariants.push_back({"stability " + to_string(method) + " k=" + std::to_string(k_max), a == b,
                            a.str() + " vs " + b.str()});
  }

  if (builtin_id) {
    r.has_fixture = true;
    const auto printed = published_fixture(*builtin_id, FixtureVariant::printed);
    const auto implied = published_fixture(*builtin_id, FixtureVariant::implied);
    r.errata = find_errata(printed, r.stats);
    for (const auto& s : implied_substitutions()) {
      if (s.mesh != *builtin_id) continue;
      SubstitutionCheck sc{s, std::nullopt};
      // location is "<label> <field>"
      const auto space = s.location.find(' ');
      const std::string label = s.location.substr(0, space);
      const std::string field = s.location.substr(space + 1);
      for (const auto& c : r.stats.classes) {
        if (c.label() != label) continue;
        if (field == "R") {
          sc.derived = c.ratio;
        } else {
          for (int m = 0; m <= r.stats.dimension; ++m) {
            if (field == "Nb(" + entity_name(m) + ")") sc.derived = Rational(c.nb_at(m));
          }
        }
      }
      r.substitutions.push_back(sc);
    }
    for (const auto& fi : fixture_invariants(printed, "printed")) r.fixture_invariants.push_back(fi);
    for (const auto& fi : fixture_invariants(implied, "implied")) r.fixture_invariants.push_back(fi);
  }
  return r;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

std::string render_verify(const VerifyResult& r, Format format) {
  const std::string summary = "oracle == formula: " + std::to_string(r.oracle_passed()) + "/" +
                              std::to_string(r.oracle.size()) + " checks";
  int violations = 0;
  for (const auto& f : r.fixture_invariants) violations += f.passed ? 0 : 1;

  if (format == Format::json) {
    ordered_json j;
    j["mesh"] = r.mesh;
    j["derivation"] = to_string(r.stats.derivation);
    j["tiling"] = r.tiling;
    j["k"] = {r.k_min, r.k_max};
    j["invariants"] = ordered_json::array();
    for (const auto& c : r.invariants) j["invariants"].push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["oracle"] = {{"passed", r.oracle_passed()}, {"total", r.oracle.size()}, {"failures", ordered_json::array()}};
    for (const auto& c : r.oracle) {
      if (c.passed()) continue;
      j["oracle"]["failures"].push_back({{"method", to_string(c.method)},
                                         {"k", c.k},
                                         {"formula_ncdof", c.formula_ncdof.str()},
                                         {"oracle_ncdof", c.oracle_ncdof.str()},
                                         {"formula_nnze", c.formula_nnze.str()},
                                         {"oracle_nnze", c.oracle_nnze.str()}});
    }
    j["published_fixture"] = r.has_fixture;
    j["errata"] = ordered_json::array();
    for (const auto& e : r.errata) {
      j["errata"].push_back(
          {{"location", e.location}, {"printed", e.printed.str()}, {"derived", e.derived.str()}, {"effect", e.effect}});
    }
    j["implied_substitutions"] = ordered_json::array();
    for (const auto& s : r.substitutions) {
      j["implied_substitutions"].push_back({{"location", s.substitution.location},
                                            {"printed", s.substitution.printed.str()},
                                            {"implied", s.substitution.implied.str()},
                                            {"derived", s.derived ? ordered_json(s.derived->str()) : ordered_json()}});
    }
    j["fixture_invariants"] = ordered_json::array();
    for (const auto& f : r.fixture_invariants) {
      j["fixture_invariants"].push_back({{"fixture", f.fixture},
                                         {"check", f.check},
                                         {"lhs", f.lhs.str()},
                                         {"rhs", f.rhs.str()},
                                         {"passed", f.passed}});
    }
    return j.dump(2) + "\n";
  }

  if (format == Format::csv) {
    std::string out = csv_line({"section", "item", "a", "b", "result"});
    for (const auto& c : r.invariants) out += csv_line({"invariant", c.name, c.detail, "", pass(c.passed)});
    for (const auto& c : r.oracle) {
      out += csv_line({"oracle", to_string(c.method) + " k=" + std::to_string(c.k), c.formula_nnze.str(),
                       c.oracle_nnze.str(), pass(c.passed())});
    }
    for (const auto& e : r.errata) {
      out += csv_line({"errata", e.location, e.printed.str(), e.derived.str(), join(e.effect, "; ")});
    }
    for (const auto& s : r.substitutions) {
      out += csv_line({"implied", s.substitution.location, s.substitution.printed.str(), s.substitution.implied.str(),
                       s.derived ? s.derived->str() : ""});
    }
    for (const auto& f : r.fixture_invariants) {
      out += csv_line({"fixture-" + f.fixture, f.check, f.lhs.str(), f.rhs.str(), pass(f.passed)});
    }
    return out;
  }

  std::ostringstream os;
  os << "# Verification: " << r.mesh << "\n\n";
  os << "tiling " << r.tiling << " (stability against " << r.tiling + 1 << "), k = " << r.k_min << ".." << r.k_max
     << ", stats " << to_string(r.stats.derivation) << "\n\n";
  os << "## Invariants\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.invariants) rows.push_back({c.name, pass(c.passed), c.detail});
  os << markdown_table({"check", "result", "detail"}, rows) << '\n';

  os << "## Oracle\n\n" << summary << "\n";
  rows.clear();
  for (const auto& c : r.oracle) {
    if (c.passed()) continue;
    rows.push_back({to_string(c.method), std::to_string(c.k), c.formula_ncdof.str(), c.oracle_ncdof.str(),
                    c.formula_nnze.str(), c.oracle_nnze.str()});
  }
  if (!rows.empty()) {
    os << '\n'
       << markdown_table({"method", "k", "formula ncdof", "oracle ncdof", "formula nnze", "oracle nnze"}, rows);
  }
  os << '\n';

  if (!r.has_fixture) {
    os << "## Errata\n\nno published fixture for this mesh\n";
    return os.str();
  }
  os << "## Errata\n\n";
  if (r.errata.empty()) {
    os << "no errata\n";
  } else {
    rows.clear();
    for (const auto& e : r.errata) {
      rows.push_back({e.location, e.printed.str(), e.derived.str(), e.effect.empty() ? "none" : join(e.effect, "; ")});
    }
    os << markdown_table({"location", "printed", "derived", "effect"}, rows);
  }
  os << '\n';

  os << "## Implied substitutions\n\n";
  if (r.substitutions.empty()) {
    os << "none\n";
  } else {
    rows.clear();
    for (const auto& s : r.substitutions) {
      rows.push_back({s.substitution.location, s.substitution.printed.str(), s.substitution.implied.str(),
                      s.derived ? s.derived->str() : "-"});
    }
    os << markdown_table({"location", "printed", "implied", "derived"}, rows);
  }
  os << '\n';

  os << "## Fixture invariants\n\n";
  if (violations == 0) {
    os << "no violations\n";
  } else {
    rows.clear();
    for (const auto& f : r.fixture_invariants) {
      if (f.passed) continue;
      rows.push_back({f.fixture, f.check, f.lhs.str(), f.rhs.str()});
    }
    os << markdown_table({"fixture", "check", "lhs", "rhs"}, rows);
  }
  return os.str();
}

}  // namespace polysparse
