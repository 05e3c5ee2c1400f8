#pragma once

#include <string>
#include <vector>

#include "polysparse/formula_engine.hpp"
#include "polysparse/polynomial.hpp"
#include "polysparse/report.hpp"
#include "published_tables.hpp"

namespace published {

inline polysparse::RationalPolynomial to_poly(const std::vector<const char*>& coeffs) {
  std::vector<polysparse::Rational> c;
  for (const char* s : coeffs) c.push_back(polysparse::Rational::parse(s));
  return polysparse::RationalPolynomial(c);
}

// A published cell matches when it is the exact value or, for one-decimal entries, the
// value rounded half up.
inline bool cell_matches(const polysparse::Rational& value, const std::string& printed) {
  if (printed.find('.') == std::string::npos) return value == polysparse::Rational::parse(printed);
  return polysparse::decimal_string(value) == printed;
}

inline polysparse::Metric metric_of(const Row& r) { return *polysparse::parse_metric(r.metric); }
inline polysparse::Method method_of(const char* name) { return *polysparse::parse_method(name); }
inline polysparse::BuiltinMeshId mesh_of(const char* name) { return *polysparse::parse_builtin(name); }

}  // namespace published
