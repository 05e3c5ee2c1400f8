#include "polysparse/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polysparse/assembly_oracle.hpp"
#include "polysparse/builtin_meshes.hpp"
#include "polysparse/errors.hpp"
#include "polysparse/formula_engine.hpp"
#include "polysparse/report.hpp"
#include "polysparse/topology_stats.hpp"
#include "polysparse/verify.hpp"

namespace polysparse::cli {
namespace {

struct Options {
  std::string mesh;
  std::string format = "md";
  std::string fixture = "derived";
  int tiling = 3;
  int k_min = 1;
  int k_max = 10;
  bool decimal = false;
  std::string out;
  bool force = false;
  std::string method;
  std::string methods;
  std::string metric = "nnze";
  int k = 1;
};

// Argument problems surface as this and map to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MeshInput {
  std::optional<PeriodicCellComplex> complex;
  std::optional<BuiltinMeshId> id;
};

MeshInput resolve_mesh(const std::string& mesh) {
  if (mesh.empty()) throw UsageError("--mesh is required");
  MeshInput in;
  if (auto id = parse_builtin(mesh)) {
    in.id = id;
    in.complex = builtin(*id);
    return in;
  }
  if (!std::filesystem::is_regular_file(mesh)) {
    std::string names;
    for (const auto& b : list_builtins()) names += (names.empty() ? "" : ", ") + b.name;
    throw UsageError("unknown mesh '" + mesh + "' (not a file; builtins: " + names + ")");
  }
  in.complex = load_mesh(mesh);
  return in;
}

Format format_of(const Options& o) {
  auto f = parse_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (md, csv, json)");
  return *f;
}

Metric metric_of(const Options& o) {
  auto m = parse_metric(o.metric);
  if (!m) throw UsageError("unknown metric '" + o.metric + "' (ndof, ncdof, nnze)");
  return *m;
}

void check_k_range(const Options& o) {
  if (o.k_min < 1 || o.k_max > 50 || o.k_min > o.k_max) {
    throw UsageError("k range must satisfy 1 <= k-min <= k-max <= 50");
  }
}

std::vector<Method> methods_of(const Options& o, Metric metric) {
  std::vector<Method> out;
  auto add = [&](const std::string& name) {
    auto m = parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "' (DG, TDG2, TDG1, HDG, HHO, VEM)");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  };
  if (!o.method.empty()) add(o.method);
  std::stringstream list(o.methods);
  for (std::string name; std::getline(list, name, ',');) {
    if (!name.empty()) add(name);
  }
  if (out.empty()) {
    for (auto m : method_display_order()) {
      if (!(metric == Metric::ndof && m == Method::HHO)) out.push_back(m);
    }
  }
  if (metric == Metric::ndof && std::find(out.begin(), out.end(), Method::HHO) != out.end()) {
    throw UsageError("ndof is not available for HHO: the degree of its cell unknowns is unspecified");
  }
  return out;
}

TopologyStats stats_of(const Options& o, const MeshInput& in) {
  if (o.fixture == "derived") return classify(*in.complex);
  if (o.fixture != "printed" && o.fixture != "implied") {
    throw UsageError("unknown fixture '" + o.fixture + "' (derived, printed, implied)");
  }
  if (!in.id) throw UsageError("--fixture " + o.fixture + " needs a builtin mesh");
  return published_fixture(*in.id, o.fixture == "printed" ? FixtureVariant::printed : FixtureVariant::implied);
}

// Mesh-derived rows that differ from the published (implied) values.
void notice_if_different(const Options& o, const MeshInput& in, const TopologyStats& stats,
                         const std::vector<Method>& methods, Metric metric, std::ostream& err) {
  if (o.fixture != "derived" || !in.id) return;
  const auto implied = published_fixture(*in.id, FixtureVariant::implied);
  std::vector<std::string> rows;
  for (auto m : methods) {
    if (metric_poly(m, metric, stats) != metric_poly(m, metric, implied)) rows.push_back(to_string(m));
  }
  if (rows.empty()) return;
  std::string list;
  for (const auto& r : rows) list += (list.empty() ? "" : ", ") + r;
  err << "notice: mesh-derived " << to_string(metric) << " for " << list
      << " differs from the published values; use --fixture implied to reproduce them\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open '" + o.out + "' for writing");
  file << text;
  file.flush();
  if (!file) throw WriteError("write to '" + o.out + "' failed");
}

int cmd_topology(const Options& o, std::ostream& out) {
  const auto format = format_of(o);
  const auto in = resolve_mesh(o.mesh);
  emit(o, render_topology(topology_report(stats_of(o, in)), format), out);
  return kOk;
}

int cmd_poly(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = format_of(o);
  const auto metric = metric_of(o);
  const auto methods = methods_of(o, metric);
  const auto in = resolve_mesh(o.mesh);
  const auto stats = stats_of(o, in);
  std::vector<PolyLine> lines;
  for (auto m : methods) lines.push_back({m, metric_poly(m, metric, stats)});
  notice_if_different(o, in, stats, methods, metric, err);
  emit(o, render_polys(stats.mesh, stats.derivation, metric, lines, format), out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = format_of(o);
  const auto metric = metric_of(o);
  check_k_range(o);
  const auto methods = methods_of(o, metric);
  const auto in = resolve_mesh(o.mesh);
  const auto stats = stats_of(o, in);
  const auto table = build_table(stats, methods, metric, o.k_min, o.k_max);
  notice_if_different(o, in, stats, methods, metric, err);
  emit(o, render_table(table, format, o.decimal), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = format_of(o);
  check_k_range(o);
  if (o.tiling < 3) throw UsageError("verify needs --tiling >= 3");
  const auto in = resolve_mesh(o.mesh);
  const auto result = run_verify(*in.complex, in.id, o.tiling, o.k_min, o.k_max);
  emit(o, render_verify(result, format), out);
  if (!result.formula_matches_oracle()) {
    err << "error: formula and oracle disagree on " << result.oracle.size() - static_cast<std::size_t>(result.oracle_passed())
        << " checks\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = format_of(o);
  if (o.method.empty()) throw UsageError("export-pattern needs --method");
  auto method = parse_method(o.method);
  if (!method) throw UsageError("unknown method '" + o.method + "'");
  if (o.k < 1) throw UsageError("--k must be >= 1");
  if (o.tiling < 1) throw UsageError("--tiling must be >= 1");
  if (o.out.empty()) throw UsageError("export-pattern needs --out");
  const auto in = resolve_mesh(o.mesh);

  const auto stable = stability_check(*in.complex, *method, o.k, o.tiling, o.tiling + 1);
  if (!stable.passed) {
    err << (o.force ? "warning" : "error") << ": stability check failed: nnze per element " << stable.nnze1.str()
        << " at tiling " << stable.n1 << " vs " << stable.nnze2.str() << " at tiling " << stable.n2
        << (o.force ? "; exporting anyway\n" : "; pass --force to export anyway\n");
    if (!o.force) return kBadArguments;
  }

  const TorusComplex torus = tile(*in.complex, o.tiling);
  const auto pattern = coupling_pattern(torus, *method, o.k);
  export_pattern(pattern, o.out);
  if (format == Format::json) {
    nlohmann::ordered_json j{{"mesh", in.complex->name()},
                             {"method", to_string(*method)},
                             {"k", o.k},
                             {"tiling", o.tiling},
                             {"rows", pattern.dofs},
                             {"cols", pattern.dofs},
                             {"nnz", pattern.nnz},
                             {"stable", stable.passed},
                             {"path", o.out}};
    out << j.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << "rows,cols,nnz\n" << pattern.dofs << ',' << pattern.dofs << ',' << pattern.nnz << '\n';
  } else {
    out << pattern.dofs << ' ' << pattern.dofs << ' ' << pattern.nnz << '\n';
  }
  return kOk;
}

void add_shared(CLI::App* sub, Options& o) {
  sub->add_option("--mesh", o.mesh, "builtin mesh name or mesh JSON file");
  sub->add_option("--format", o.format, "md, csv or json");
  sub->add_option("--fixture", o.fixture, "derived, printed or implied");
  sub->add_option("--tiling", o.tiling, "cells per axis of the torus");
  sub->add_option("--k-min", o.k_min, "smallest degree");
  sub->add_option("--k-max", o.k_max, "largest degree");
  sub->add_flag("--decimal", o.decimal, "round to one decimal");
  sub->add_option("--out", o.out, "output file");
  sub->add_flag("--force", o.force, "export even if the stability check fails");
  sub->add_option("--method", o.method, "DG, TDG1, TDG2, HDG, HHO or VEM");
  sub->add_option("--methods", o.methods, "comma-separated methods");
  sub->add_option("--metric", o.metric, "ndof, ncdof or nnze");
  sub->add_option("--k", o.k, "polynomial degree");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sparsity of polytopal finite element systems on periodic meshes", "polysparse"};
  app.require_subcommand(1, 1);
  auto* topology = app.add_subcommand("topology", "neighbourhood classes Nb and R");
  auto* poly = app.add_subcommand("poly", "per-element count polynomials in k");
  auto* table = app.add_subcommand("table", "per-element counts for a range of k");
  auto* verify = app.add_subcommand("verify", "oracle check, invariants and errata");
  auto* exportp = app.add_subcommand("export-pattern", "write the coupling pattern as Matrix Market");
  for (auto* sub : {topology, poly, table, verify, exportp}) add_shared(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    return kBadArguments;
  }

  try {
    if (topology->parsed()) return cmd_topology(o, out);
    if (poly->parsed()) return cmd_poly(o, out, err);
    if (table->parsed()) return cmd_table(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_export(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const MeshError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const UnstableClassification& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidMesh;
  } catch (const WriteError& e) {
    err << "error: " << e.what() << '\n';
    return kWriteFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
}

}  // namespace polysparse::cli
