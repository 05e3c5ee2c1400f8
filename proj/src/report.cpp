#include "polysparse/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polysparse {

using nlohmann::ordered_json;

std::string to_string(Format f) {
  switch (f) {
    case Format::md: return "md";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "?";
}

std::optional<Format> parse_format(std::string_view name) {
  for (auto f : {Format::md, Format::csv, Format::json}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string decimal_string(const Rational& value) {
  const std::int64_t tenths = (value * Rational(10) + Rational(1, 2)).floor();
  if (tenths % 10 == 0) return std::to_string(tenths / 10);
  const bool negative = tenths < 0;
  const std::int64_t mag = negative ? -tenths : tenths;
  return (negative ? "-" : "") + std::to_string(mag / 10) + "." + std::to_string(mag % 10);
}

ReportTable build_table(const TopologyStats& stats, const std::vector<Method>& methods, Metric metric, int k_min,
                        int k_max) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("invalid k range");
  ReportTable t;
  t.mesh = stats.mesh;
  t.derivation = stats.derivation;
  t.metric = metric;
  t.caption = to_string(metric) + " per element, " + stats.mesh + " (" + to_string(stats.derivation) + ")";
  for (int k = k_min; k <= k_max; ++k) t.ks.push_back(k);
  for (auto m : methods) {
    const auto poly = metric_poly(m, metric, stats);
    ReportRow row{m, to_string(metric) + "_" + to_string(m), {}};
    for (int k : t.ks) row.values.push_back(evaluate(poly, k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << '|';
    for (const auto& c : cells) os << ' ' << c << " |";
    os << '\n';
  };
  line(header);
  os << '|';
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const auto& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      out += c;
      continue;
    }
    out += '"';
    for (char ch : c) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out + '\n';
}

std::string render_table(const ReportTable& table, Format format, bool decimal) {
  auto cell = [&](const Rational& v) { return decimal ? decimal_string(v) : v.str(); };
  if (format == Format::json) {
    ordered_json j;
    j["mesh"] = table.mesh;
    j["derivation"] = to_string(table.derivation);
    j["metric"] = to_string(table.metric);
    j["k"] = table.ks;
    j["rows"] = ordered_json::array();
    for (const auto& r : table.rows) {
      ordered_json row;
      row["method"] = to_string(r.method);
      row["label"] = r.label;
      row["values"] = ordered_json::array();
      for (const auto& v : r.values) row["values"].push_back(v.str());
      if (decimal) {
        row["decimal"] = ordered_json::array();
        for (const auto& v : r.values) row["decimal"].push_back(decimal_string(v));
      }
      j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header{"k"};
  for (int k : table.ks) header.push_back(std::to_string(k));
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows) {
    std::vector<std::string> line{r.label};
    for (const auto& v : r.values) line.push_back(cell(v));
    rows.push_back(std::move(line));
  }
  if (format == Format::csv) {
    std::string out = csv_line(header);
    for (const auto& r : rows) out += csv_line(r);
    return out;
  }
  return table.caption + "\n\n" + markdown_table(header, rows);
}

std::string render_topology(const TopologyReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["mesh"] = report.mesh;
    j["derivation"] = to_string(report.derivation);
    j["columns"] = report.columns;
    j["classes"] = ordered_json::array();
    for (const auto& r : report.rows) {
      ordered_json c;
      c["class"] = r.front();
      ordered_json nb = ordered_json::object();
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (r[i] == "-") {
          nb[report.columns[i]] = nullptr;
        } else {
          nb[report.columns[i]] = std::stoll(r[i]);
        }
      }
      c["nb"] = std::move(nb);
      c["R"] = r.back();
      j["classes"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = csv_line(report.columns);
    for (const auto& r : report.rows) out += csv_line(r);
    return out;
  }
  return report.mesh + " neighbourhood topology (" + to_string(report.derivation) + ")\n\n" +
         markdown_table(report.columns, report.rows);
}

std::string render_polys(const std::string& mesh, Derivation derivation, Metric metric,
                         const std::vector<PolyLine>& lines, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["mesh"] = mesh;
    j["derivation"] = to_string(derivation);
    j["metric"] = to_string(metric);
    j["polynomials"] = ordered_json::array();
    for (const auto& l : lines) {
      ordered_json p;
      p["method"] = to_string(l.method);
      p["polynomial"] = l.poly.str();
      p["degree"] = l.poly.degree();
      p["coefficients"] = ordered_json::array();
      for (const auto& c : l.poly.coefficients()) p["coefficients"].push_back(c.str());
      j["polynomials"].push_back(std::move(p));
    }
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = csv_line({"method", "metric", "polynomial"});
    for (const auto& l : lines) out += csv_line({to_string(l.method), to_string(metric), l.poly.str()});
    return out;
  }
  if (lines.size() == 1) return lines.front().poly.str() + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : lines) rows.push_back({to_string(l.method), l.poly.str()});
  return markdown_table({"method", to_string(metric)}, rows);
}

}  // namespace polysparse
