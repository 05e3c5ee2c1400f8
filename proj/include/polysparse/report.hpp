#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysparse/dof_model.hpp"
#include "polysparse/formula_engine.hpp"
#include "polysparse/topology_stats.hpp"

namespace polysparse {

enum class Format { md, csv, json };

std::string to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

// One decimal, rounded half up; integers print without ".0" (0.25 -> "0.3", 3 -> "3").
std::string decimal_string(const Rational& value);

struct ReportRow {
  Method method;
  std::string label;  // e.g. "nnze_DG"
  std::vector<Rational> values;
};

struct ReportTable {
  std::string caption;
  std::string mesh;
  Derivation derivation = Derivation::mesh_derived;
  Metric metric = Metric::nnze;
  std::vector<int> ks;
  std::vector<ReportRow> rows;
};

// Throws std::invalid_argument for an empty or out-of-order k range or k < 1.
ReportTable build_table(const TopologyStats& stats, const std::vector<Method>& methods, Metric metric, int k_min,
                        int k_max);

std::string render_table(const ReportTable& table, Format format, bool decimal);
std::string render_topology(const TopologyReport& report, Format format);

struct PolyLine {
  Method method;
  RationalPolynomial poly;
};

std::string render_polys(const std::string& mesh, Derivation derivation, Metric metric,
                         const std::vector<PolyLine>& lines, Format format);

// Markdown pipe table.
std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
// RFC 4180 quoting where needed.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace polysparse
