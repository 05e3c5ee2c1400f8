#include <stdexcept>

#include "doctest.h"
#include "polysparse/dof_model.hpp"

using namespace polysparse;

TEST_CASE("local ndof examples") {
  CHECK(local_ndof(Method::DG, DofRole::element(), 3, 2) == 10);
  CHECK(local_ndof(Method::TDG2, DofRole::element(), 2, 5) == 11);
  CHECK(local_ndof(Method::VEM, DofRole::sub(1), 2, 1) == 0);
  CHECK(local_ndof(Method::HHO, DofRole::facet(), 3, 1) == 1);
  CHECK(local_ndof(Method::VEM, DofRole::sub(0), 3, 7) == 1);
  CHECK(local_ndof(Method::VEM, DofRole::element(), 3, 7) == 0);
  CHECK(local_ndof(Method::VEM, DofRole::sub(2), 3, 3) == 3);
}

TEST_CASE("local ndof polynomials") {
  CHECK(local_ndof_poly(Method::HDG, DofRole::facet(), 2) == RationalPolynomial({1, 1}));
  CHECK(local_ndof_poly(Method::TDG2, DofRole::element(), 3) == RationalPolynomial({1, 2, 1}));
  CHECK(local_ndof_poly(Method::TDG1, DofRole::element(), 3) == RationalPolynomial({1, Rational(3, 2), Rational(1, 2)}));
  CHECK(local_ndof_poly(Method::DG, DofRole::element(), 2) == RationalPolynomial({1, Rational(3, 2), Rational(1, 2)}));
  CHECK(local_ndof_poly(Method::HHO, DofRole::facet(), 2) == RationalPolynomial({0, 1}));
  CHECK(local_ndof_poly(Method::VEM, DofRole::sub(2), 3).str() == "1/2*k^2 - 1/2*k");
  CHECK(local_ndof_poly(Method::VEM, DofRole::element(), 2).is_zero());
}

TEST_CASE("role and degree errors") {
  CHECK_THROWS_AS(local_ndof(Method::DG, DofRole::facet(), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_ndof(Method::HDG, DofRole::element(), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_ndof(Method::HHO, DofRole::sub(0), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_ndof(Method::VEM, DofRole::sub(4), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(local_ndof(Method::DG, DofRole::element(), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(local_ndof_poly(Method::TDG1, DofRole::sub(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(interior_ndof(Method::HHO, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(interior_ndof_poly(Method::HHO, 3), std::invalid_argument);
}

TEST_CASE("Trefftz ordering and kernel identity") {
  for (int d = 2; d <= 3; ++d) {
    for (int k = 1; k <= 10; ++k) {
      const auto dg = local_ndof(Method::DG, DofRole::element(), d, k);
      const auto t2 = local_ndof(Method::TDG2, DofRole::element(), d, k);
      const auto t1 = local_ndof(Method::TDG1, DofRole::element(), d, k);
      CHECK(t1 <= t2);
      CHECK(t2 <= dg);
      const auto dg_minus_2 = k >= 3 ? local_ndof(Method::DG, DofRole::element(), d, k - 2) : binomial(k - 2 + d, d);
      CHECK(t2 == dg - dg_minus_2);
    }
  }
}

TEST_CASE("HHO facet count is HDG at one degree lower") {
  for (int d = 2; d <= 3; ++d) {
    for (int k = 2; k <= 10; ++k) {
      CHECK(local_ndof(Method::HHO, DofRole::facet(), d, k) == local_ndof(Method::HDG, DofRole::facet(), d, k - 1));
    }
  }
}

TEST_CASE("polynomial and numeric counts agree from the validity threshold") {
  struct Case {
    Method method;
    DofRole role;
  };
  for (int d = 2; d <= 3; ++d) {
    std::vector<Case> cases{{Method::DG, DofRole::element()},  {Method::TDG1, DofRole::element()},
                            {Method::TDG2, DofRole::element()}, {Method::HDG, DofRole::facet()},
                            {Method::HHO, DofRole::facet()},    {Method::VEM, DofRole::element()}};
    for (int m = 0; m < d; ++m) cases.push_back({Method::VEM, DofRole::sub(m)});
    for (const auto& c : cases) {
      const auto poly = local_ndof_poly(c.method, c.role, d);
      const int from = validity_threshold(c.method, c.role, d);
      CHECK(from == 1);
      for (int k = from; k <= 12; ++k) {
        CAPTURE(to_string(c.method));
        CAPTURE(k);
        CHECK(poly(Rational(k)) == Rational(local_ndof(c.method, c.role, d, k)));
      }
    }
    for (auto m : {Method::DG, Method::TDG1, Method::TDG2, Method::HDG, Method::VEM}) {
      for (int k = 1; k <= 12; ++k) CHECK(interior_ndof_poly(m, d)(Rational(k)) == Rational(interior_ndof(m, d, k)));
    }
  }
}

TEST_CASE("method names") {
  CHECK(method_display_order()[1] == Method::TDG2);
  CHECK(parse_method("TDG1") == Method::TDG1);
  CHECK_FALSE(parse_method("dg").has_value());
  CHECK(to_string(Method::HHO) == "HHO");
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
}
