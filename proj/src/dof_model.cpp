#include "polysparse/dof_model.hpp"

#include <stdexcept>

namespace polysparse {

const std::array<Method, 6>& method_display_order() {
  static const std::array<Method, 6> order{Method::DG, Method::TDG2, Method::TDG1, Method::HDG, Method::HHO, Method::VEM};
  return order;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::DG: return "DG";
    case Method::TDG1: return "TDG1";
    case Method::TDG2: return "TDG2";
    case Method::HDG: return "HDG";
    case Method::HHO: return "HHO";
    case Method::VEM: return "VEM";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto m : method_display_order()) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool is_element_method(Method m) { return m == Method::DG || m == Method::TDG1 || m == Method::TDG2; }
bool is_facet_method(Method m) { return m == Method::HDG || m == Method::HHO; }

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || n < r) return 0;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

namespace {

void check_dim(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("dimension must be in [1, 3]");
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("degree k must be >= 1, got " + std::to_string(k));
}

[[noreturn]] void mismatch(Method method) {
  throw std::invalid_argument("role does not carry coupling unknowns for " + to_string(method));
}

// Sub-entity dimension for VEM, accepting facet and element as aliases.
int vem_dim(DofRole role, int d) {
  switch (role.kind) {
    case DofRole::Kind::element: return d;
    case DofRole::Kind::facet: return d - 1;
    case DofRole::Kind::sub:
      if (role.m < 0 || role.m > d) throw std::invalid_argument("sub-entity dimension out of range");
      return role.m;
  }
  return d;
}

// Every count is C(k + shift, r) or a difference of two; `terms` lists (sign, shift, r).
struct Term {
  int sign;
  int shift;
  int r;
};

std::vector<Term> terms(Method method, DofRole role, int d) {
  check_dim(d);
  switch (method) {
    case Method::DG:
    case Method::TDG1:
    case Method::TDG2:
      if (role.kind != DofRole::Kind::element) mismatch(method);
      if (method == Method::DG) return {{1, d, d}};
      if (method == Method::TDG2) return {{1, d, d}, {-1, d - 2, d}};
      return {{1, d, d}, {-1, d - 1, d}};
    case Method::HDG:
    case Method::HHO:
      if (role.kind != DofRole::Kind::facet) mismatch(method);
      return {{1, method == Method::HDG ? d - 1 : d - 2, d - 1}};
    case Method::VEM: {
      const int m = vem_dim(role, d);
      if (m == d) return {};
      if (m == 0) return {{1, 0, 0}};
      return {{1, m - 2, m}};
    }
  }
  return {};
}

}  // namespace

std::int64_t local_ndof(Method method, DofRole role, int d, int k) {
  check_k(k);
  std::int64_t n = 0;
  for (const auto& t : terms(method, role, d)) n += t.sign * binomial(k + t.shift, t.r);
  return n;
}

RationalPolynomial local_ndof_poly(Method method, DofRole role, int d) {
  RationalPolynomial p;
  for (const auto& t : terms(method, role, d)) p += RationalPolynomial::binomial(t.shift, t.r) * Rational(t.sign);
  return p;
}

int validity_threshold(Method method, DofRole role, int d) {
  terms(method, role, d);
  return 1;
}

std::int64_t interior_ndof(Method method, int d, int k) {
  check_k(k);
  check_dim(d);
  switch (method) {
    case Method::HDG: return binomial(k + d, d);
    case Method::VEM: return binomial(k - 2 + d, d);
    case Method::HHO: throw std::invalid_argument("HHO cell unknown degree is unspecified; no pre-condensation total");
    default: return local_ndof(method, DofRole::element(), d, k);
  }
}

RationalPolynomial interior_ndof_poly(Method method, int d) {
  check_dim(d);
  switch (method) {
    case Method::HDG: return RationalPolynomial::binomial(d, d);
    case Method::VEM: return RationalPolynomial::binomial(d - 2, d);
    case Method::HHO: throw std::invalid_argument("HHO cell unknown degree is unspecified; no pre-condensation total");
    default: return local_ndof_poly(method, DofRole::element(), d);
  }
}

}  // namespace polysparse
