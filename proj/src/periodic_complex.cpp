#include "polysparse/periodic_complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace polysparse {

using nlohmann::ordered_json;

OffsetVector::OffsetVector(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("offset dimension out of range");
}

OffsetVector::OffsetVector(std::initializer_list<int> coords) : OffsetVector(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

OffsetVector OffsetVector::from(std::span<const int> coords) {
  OffsetVector v(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), v.c_.begin());
  return v;
}

bool OffsetVector::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](int x) { return x == 0; });
}

OffsetVector& OffsetVector::operator+=(const OffsetVector& rhs) {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += rhs[i];
  return *this;
}

OffsetVector& OffsetVector::operator-=(const OffsetVector& rhs) {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] -= rhs[i];
  return *this;
}

std::string OffsetVector::str() const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  return s + ")";
}

PeriodicCellComplex::PeriodicCellComplex(std::string name, int dimension, std::vector<EntityOrbit> orbits)
    : name_(std::move(name)), dimension_(dimension), orbits_(std::move(orbits)) {
  if (dimension_ != 2 && dimension_ != 3) {
    throw MeshError("dimension must be 2 or 3, got " + std::to_string(dimension_));
  }
  by_dim_.resize(static_cast<std::size_t>(dimension_) + 1);
  local_index_.resize(orbits_.size());
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    const auto& o = orbits_[i];
    if (o.dim < 0 || o.dim > dimension_) {
      throw MeshError("orbit '" + o.id + "' has dim " + std::to_string(o.dim) + " outside [0, " +
                      std::to_string(dimension_) + "]");
    }
    if (!ids_.emplace(o.id, i).second) throw MeshError("duplicate orbit id '" + o.id + "'");
    auto& bucket = by_dim_[static_cast<std::size_t>(o.dim)];
    local_index_[i] = bucket.size();
    bucket.push_back(i);
  }
  resolved_.resize(orbits_.size());
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    const auto& o = orbits_[i];
    if (o.dim == 0 && !o.boundary.empty()) throw MeshError("vertex orbit '" + o.id + "' must have an empty boundary");
    for (const auto& ref : o.boundary) {
      auto it = ids_.find(ref.of);
      if (it == ids_.end()) throw MeshError("orbit '" + o.id + "' references unknown orbit '" + ref.of + "'");
      if (orbits_[it->second].dim != o.dim - 1) {
        throw MeshError("boundary dimension mismatch: orbit '" + o.id + "' (dim " + std::to_string(o.dim) +
                        ") references '" + ref.of + "' (dim " + std::to_string(orbits_[it->second].dim) + ")");
      }
      if (ref.offset.dim() != dimension_) {
        throw MeshError("offset of '" + ref.of + "' in orbit '" + o.id + "' has length " +
                        std::to_string(ref.offset.dim()) + ", expected " + std::to_string(dimension_));
      }
      resolved_[i].push_back({it->second, ref.offset});
    }
  }
}

std::optional<std::size_t> PeriodicCellComplex::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t PeriodicCellComplex::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw std::invalid_argument("unknown orbit id '" + std::string(id) + "'");
  return *found;
}

const std::vector<std::size_t>& PeriodicCellComplex::orbits_of_dim(int m) const {
  static const std::vector<std::size_t> kEmpty;
  if (m < 0 || m > dimension_) return kEmpty;
  return by_dim_[static_cast<std::size_t>(m)];
}

Closure closure_at(const PeriodicCellComplex& complex, std::size_t orbit) {
  const int top = complex.orbit(orbit).dim;
  Closure result(static_cast<std::size_t>(top) + 1);
  std::set<OrbitCell> level{{orbit, OffsetVector(complex.dimension())}};
  for (int m = top; m >= 0; --m) {
    result[static_cast<std::size_t>(m)].assign(level.begin(), level.end());
    std::set<OrbitCell> next;
    for (const auto& cell : level) {
      for (const auto& b : complex.boundary(cell.orbit)) next.insert({b.orbit, cell.offset + b.offset});
    }
    level = std::move(next);
  }
  return result;
}

Closure closure(const PeriodicCellComplex& complex, std::string_view orbit_id) {
  return closure_at(complex, complex.index_of(orbit_id));
}

long euler_characteristic(const PeriodicCellComplex& complex) {
  long chi = 0;
  for (int m = 0; m <= complex.dimension(); ++m) {
    chi += (m % 2 == 0 ? 1 : -1) * static_cast<long>(complex.count(m));
  }
  return chi;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (!c.passed) out += c.name + ": " + c.detail + "\n";
  }
  return out;
}

namespace {

ValidationCheck check_facet_rule(const PeriodicCellComplex& complex) {
  const int d = complex.dimension();
  std::map<std::size_t, int> uses;
  for (auto facet : complex.orbits_of_dim(d - 1)) uses[facet] = 0;
  for (auto element : complex.orbits_of_dim(d)) {
    for (const auto& b : complex.boundary(element)) ++uses[b.orbit];
  }
  ValidationCheck check{"facet-rule", true, {}};
  for (const auto& [facet, n] : uses) {
    if (n != 2) {
      check.passed = false;
      if (!check.detail.empty()) check.detail += "; ";
      check.detail += "facet orbit '" + complex.orbit(facet).id + "' occurs " + std::to_string(n) +
                      " time(s) in element boundaries, expected 2";
    }
  }
  return check;
}

// Every orbit of dim >= 1 must have distinct boundary entries and at least dim + 1
// vertices; for dim >= 2 each codim-2 entity in the closure lies on exactly two of the
// boundary entries (the diamond property of a polytope).
ValidationCheck check_closure_consistency(const PeriodicCellComplex& complex) {
  ValidationCheck check{"closure-consistency", true, {}};
  auto fail = [&](const std::string& msg) {
    check.passed = false;
    if (!check.detail.empty()) check.detail += "; ";
    check.detail += msg;
  };
  for (std::size_t i = 0; i < complex.orbits().size(); ++i) {
    const auto& o = complex.orbit(i);
    if (o.dim == 0) continue;
    auto entries = complex.boundary(i);
    std::set<OrbitCell> distinct(entries.begin(), entries.end());
    if (distinct.size() != entries.size()) {
      fail("orbit '" + o.id + "' lists a boundary entity more than once");
      continue;
    }
    const auto cl = closure_at(complex, i);
    if (cl[0].size() < static_cast<std::size_t>(o.dim) + 1) {
      fail("orbit '" + o.id + "' has only " + std::to_string(cl[0].size()) + " distinct vertices");
    }
    if (o.dim == 1 && cl[0].size() != 2) fail("edge orbit '" + o.id + "' does not join two distinct vertices");
    if (o.dim >= 2) {
      std::map<OrbitCell, int> ridge_uses;
      for (const auto& b : entries) {
        for (const auto& r : complex.boundary(b.orbit)) ++ridge_uses[{r.orbit, b.offset + r.offset}];
      }
      for (const auto& [ridge, n] : ridge_uses) {
        if (n != 2) {
          fail("orbit '" + o.id + "': entity '" + complex.orbit(ridge.orbit).id + "' at " + ridge.offset.str() +
               " lies on " + std::to_string(n) + " boundary entities, expected 2");
          break;
        }
      }
    }
  }
  return check;
}

}  // namespace

ValidationReport validate(const PeriodicCellComplex& complex) {
  ValidationReport report;
  const int d = complex.dimension();

  // Construction already rejected dangling or mis-dimensioned references.
  report.checks.push_back({"boundary-references", true, "all boundary references resolve to dim-1 orbits"});

  ValidationCheck top{"element-and-facet-orbits", true, {}};
  if (complex.count(d) == 0 || complex.count(d - 1) == 0) {
    top.passed = false;
    top.detail = "need at least one element orbit and one facet orbit, found " + std::to_string(complex.count(d)) +
                 " and " + std::to_string(complex.count(d - 1));
  }
  report.checks.push_back(top);

  report.checks.push_back(check_facet_rule(complex));

  const long chi = euler_characteristic(complex);
  report.checks.push_back({"euler-characteristic", chi == 0, "chi = " + std::to_string(chi)});

  report.checks.push_back(check_closure_consistency(complex));
  return report;
}

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw MeshError("schema violation: " + msg); }

void reject_unknown(const ordered_json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!known) schema_error("unknown field '" + it.key() + "' in " + where);
  }
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

}  // namespace

PeriodicCellComplex parse_mesh(std::string_view document) {
  ordered_json root;
  try {
    root = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw MeshError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) schema_error("top level must be an object");
  reject_unknown(root, {"name", "dimension", "orbits"}, "mesh");

  const auto& name = require(root, "name", "mesh");
  if (!name.is_string()) schema_error("'name' must be a string");
  const auto& dim = require(root, "dimension", "mesh");
  if (!dim.is_number_integer()) schema_error("'dimension' must be an integer");
  const int dimension = dim.get<int>();
  if (dimension != 2 && dimension != 3) schema_error("'dimension' must be 2 or 3");
  const auto& orbits_json = require(root, "orbits", "mesh");
  if (!orbits_json.is_array()) schema_error("'orbits' must be an array");

  std::vector<EntityOrbit> orbits;
  for (const auto& oj : orbits_json) {
    if (!oj.is_object()) schema_error("orbit entries must be objects");
    reject_unknown(oj, {"id", "dim", "boundary"}, "orbit");
    EntityOrbit orbit;
    const auto& id = require(oj, "id", "orbit");
    if (!id.is_string()) schema_error("orbit 'id' must be a string");
    orbit.id = id.get<std::string>();
    const std::string where = "orbit '" + orbit.id + "'";
    const auto& odim = require(oj, "dim", where);
    if (!odim.is_number_integer()) schema_error("'dim' of " + where + " must be an integer");
    orbit.dim = odim.get<int>();
    const auto& boundary = require(oj, "boundary", where);
    if (!boundary.is_array()) schema_error("'boundary' of " + where + " must be an array");
    for (const auto& bj : boundary) {
      if (!bj.is_object()) schema_error("boundary entries of " + where + " must be objects");
      reject_unknown(bj, {"of", "offset", "orientation", "sign"}, "boundary entry of " + where);
      const auto& of = require(bj, "of", "boundary entry of " + where);
      if (!of.is_string()) schema_error("'of' in " + where + " must be a string");
      const auto& off = require(bj, "offset", "boundary entry of " + where);
      if (!off.is_array()) schema_error("'offset' in " + where + " must be an array");
      if (off.size() != static_cast<std::size_t>(dimension)) {
        throw MeshError("dimension mismatch in offsets: " + where + " has an offset of length " +
                        std::to_string(off.size()) + ", expected " + std::to_string(dimension));
      }
      std::vector<int> coords;
      for (const auto& c : off) {
        if (!c.is_number_integer()) schema_error("offset entries in " + where + " must be integers");
        coords.push_back(c.get<int>());
      }
      orbit.boundary.push_back({of.get<std::string>(), OffsetVector::from(coords)});
    }
    orbits.push_back(std::move(orbit));
  }

  PeriodicCellComplex complex(name.get<std::string>(), dimension, std::move(orbits));
  const auto report = validate(complex);
  if (!report.ok()) throw MeshError("invalid mesh '" + complex.name() + "': " + report.failures());
  return complex;
}

PeriodicCellComplex load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot read mesh file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_mesh(buffer.str());
}

std::string serialize_mesh(const PeriodicCellComplex& complex) {
  ordered_json root;
  root["name"] = complex.name();
  root["dimension"] = complex.dimension();
  root["orbits"] = ordered_json::array();
  for (const auto& o : complex.orbits()) {
    ordered_json oj;
    oj["id"] = o.id;
    oj["dim"] = o.dim;
    oj["boundary"] = ordered_json::array();
    for (const auto& b : o.boundary) {
      ordered_json bj;
      bj["of"] = b.of;
      std::vector<int> coords;
      for (int i = 0; i < b.offset.dim(); ++i) coords.push_back(b.offset[i]);
      bj["offset"] = coords;
      oj["boundary"].push_back(std::move(bj));
    }
    root["orbits"].push_back(std::move(oj));
  }
  return root.dump(2) + "\n";
}

}  // namespace polysparse
