#pragma once

#include "nthderiv/exactnum.hpp"

#include <vector>

namespace nthderiv {

// Derivative values of one function at one (implicit) point:
// d[i] = f^(i)(x0) for i = 0..order. The base point itself is never stored;
// every rule below is pointwise in these values.
struct DerivativeJet {
    std::vector<ExactRat> d;

    DerivativeJet() : d{ExactRat(0)} {}
    explicit DerivativeJet(std::vector<ExactRat> values);

    int order() const { return static_cast<int>(d.size()) - 1; }
};

bool operator==(const DerivativeJet& a, const DerivativeJet& b);

// (uv)^(m) = sum_{k=0..m} binom(m,k) u^(k) v^(m-k). Orders must match.
DerivativeJet leibniz_product(const DerivativeJet& u, const DerivativeJet& v);

// Jet of 1/v by the explicit partition-sum rule, evaluated independently at
// each order m:
//
//   (1/v)^(m) = m! sum_{partitions y of m} binom(r; y_1..y_m) (-1)^r / v^{r+1}
//                    prod_i [v^(i)/i!]^{y_i}
//
// Requires v.d[0] != 0; throws std::domain_error otherwise.
DerivativeJet reciprocal_jet(const DerivativeJet& v);

// Same contract as reciprocal_jet, computed by the classical order-by-order
// recursion. Kept as a fully independent code path so the two can be checked
// against each other:
//
//   (1/v)^(m) = -m!/v sum_{j=0..m-1} [v^(m-j)/(m-j)!] [(1/v)^(j)/j!]
DerivativeJet oracle_reciprocal_jet(const DerivativeJet& v);

// Jet of u/v by the explicit double sum
//
//   (u/v)^(m) = m! sum_{l=0..m} u^(m-l)/(m-l)! * (partition sum over l as above)
//
// and NOT by composing leibniz_product with reciprocal_jet; that composition
// stays available as an independent test oracle.
DerivativeJet quotient_jet(const DerivativeJet& u, const DerivativeJet& v);

// Same contract as quotient_jet via the triangular solve of u = v*w:
//   w^(m) = [u^(m) - sum_{k=1..m} binom(m,k) v^(k) w^(m-k)] / v^(0)
DerivativeJet oracle_quotient_jet(const DerivativeJet& u, const DerivativeJet& v);

// Derivatives of ln v for orders 1..order(v):
//
//   (ln v)^(m) = m! sum_{partitions y of m} (r-1)! (-1)^{r-1} / v^r
//                     prod_i (1/y_i!) [v^(i)/i!]^{y_i}
//
// Order 0 is omitted: ln of a rational is not rational in general.
// Requires order >= 1 and v.d[0] != 0.
std::vector<ExactRat> log_jet(const DerivativeJet& v);

// r-th derivative of 1/v with respect to v itself: (-1)^r r! / v0^{r+1}.
// This is the scalar factor that turns the partition sum above into its
// compact form. Requires v0 != 0.
ExactRat reciprocal_derivative_by_v(int r, const ExactRat& v0);

}  // namespace nthderiv
