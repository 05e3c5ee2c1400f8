#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polysparse/polynomial.hpp"

namespace polysparse {

enum class Method { DG, TDG1, TDG2, HDG, HHO, VEM };

// Table order used by every report: DG, TDG2, TDG1, HDG, HHO, VEM.
const std::array<Method, 6>& method_display_order();

std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

bool is_element_method(Method m);  // DG, TDG1, TDG2
bool is_facet_method(Method m);    // HDG, HHO

struct DofRole {
  enum class Kind { element, facet, sub };
  Kind kind = Kind::element;
  int m = 0;  // entity dimension, used for sub only

  static DofRole element() { return {Kind::element, 0}; }
  static DofRole facet() { return {Kind::facet, 0}; }
  static DofRole sub(int dim) { return {Kind::sub, dim}; }
};

// Coupling unknowns on one entity. DG/TDG take element, HDG/HHO facet, VEM sub(m) with
// m in [0, d] (0 on elements, which are condensed). Other combinations throw
// std::invalid_argument, as does k < 1.
std::int64_t local_ndof(Method method, DofRole role, int d, int k);
RationalPolynomial local_ndof_poly(Method method, DofRole role, int d);

// Smallest k from which local_ndof_poly agrees with local_ndof. Every entry factors so
// that the truncated binomials vanish polynomially; the threshold is 1 throughout.
int validity_threshold(Method method, DofRole role, int d);

// Element unknowns before condensation: DG/TDG as above, HDG C(k+d,d), VEM moments of
// degree k-2. HHO throws: its cell degree is left open.
std::int64_t interior_ndof(Method method, int d, int k);
RationalPolynomial interior_ndof_poly(Method method, int d);

// C(n, r), 0 when n < r or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t r);

}  // namespace polysparse
