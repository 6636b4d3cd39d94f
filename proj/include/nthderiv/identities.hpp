#pragma once

#include "nthderiv/partitions.hpp"

#include <map>
#include <string>

namespace nthderiv {

// One checked instance of a partition identity: both sides evaluated
// exactly plus the parameters that produced them.
struct IdentityReport {
    std::string name;
    std::map<std::string, int> params;
    ExactRat lhs;
    ExactRat rhs;
    bool holds = false;
};

bool operator==(const IdentityReport& a, const IdentityReport& b);

// Per-partition terms of the alternating multinomial sums, exposed so sweeps
// can be compared term by term and not only in total.
ExactRat exponential_term(const Partition& p);
ExactRat power_term(const Partition& p, int m);
ExactRat inverse_power_term(const Partition& p, int m);

// sum over partitions of n of binom(r; y)(-1)^r prod 1/i!^{y_i} == (-1)^n/n!
IdentityReport exponential_identity(int n);

// sum ... prod binom(m,i)^{y_i} == (-1)^n binom(n+m-1, m-1), for m >= 1.
IdentityReport power_identity(int n, int m);

// power_identity at m == n, with the right side additionally checked
// against (-1)^n binom(2n-1, n-1). Requires n >= 1.
IdentityReport central_binomial_corollary(int n);

// sum ... prod binom(i+m-1, m-1)^{y_i} == (-1)^n binom(m, n), for m >= 1.
IdentityReport inverse_power_identity(int n, int m);

// inverse_power_identity at m == 1: the alternating sum of multinomial
// coefficients, equal to 1, -1, then 0 for every n >= 2.
IdentityReport alternating_corollary(int n);

// sum over j with y_j >= 1 of multinomial(y - e_j) == multinomial(y).
// Terms where y_j == 0 contribute nothing. Requires a nonempty partition.
IdentityReport multinomial_recurrence(const Partition& y);

// sum of multinomial(phi) over all compositions phi with sum(phi) = r-1 and
// phi_i <= y_i == multinomial(y). Same left side as multinomial_recurrence.
// Requires a nonempty partition.
IdentityReport bounded_composition_identity(const Partition& y);

}  // namespace nthderiv
