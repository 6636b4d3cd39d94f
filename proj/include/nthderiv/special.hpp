#pragma once

#include "nthderiv/exactnum.hpp"

#include <map>

namespace nthderiv {

// Coefficients a[i], i = 2..n+1, of the order-n derivative of 1/ln x
// written as ((-1)^n / x^n) * sum_i a[i] / (ln x)^i. Two independent routes
// below produce this container; they must agree exactly.
struct LogReciprocalExpansion {
    int n = 0;
    std::map<int, ExactRat> a;
};

bool operator==(const LogReciprocalExpansion& lhs, const LogReciprocalExpansion& rhs);

// Nested sum over strictly decreasing positive indices,
//
//   sum_{l1 <= upper} 1/l1 sum_{l2 < l1} 1/l2 ... (depth levels),
//
// which is 0 whenever upper < depth. Memoized per invocation, so concurrent
// calls are safe.
ExactRat multiple_harmonic_sum(int depth, int upper);

// Expansion built from the harmonic sums:
//   a[2] = (n-1)!,  a[i] = (i-1)!(n-1)! * multiple_harmonic_sum(i-2, n-1)
// for 3 <= i <= n+1.
LogReciprocalExpansion harmonic_log_coefficients(int n);

// The same expansion from the partition route: each partition of n
// contributes n! * c * r! to a[r+1], where c and r are the partition's
// weight and part count.
LogReciprocalExpansion partition_log_coefficients(int n);

// partition_log_coefficients with every coefficient scaled by a stand-in
// value for ln a; the result expands (ln a) * (1/ln x)^(n), i.e. the order-n
// derivative of log_x(a). The logarithm itself is never evaluated.
LogReciprocalExpansion log_base_x_derivative(int n, const ExactRat& ln_a_scale);

}  // namespace nthderiv
