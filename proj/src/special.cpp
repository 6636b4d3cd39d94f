#include "nthderiv/special.hpp"

#include "nthderiv/partitions.hpp"

#include <stdexcept>
#include <utility>

namespace nthderiv {

bool operator==(const LogReciprocalExpansion& lhs, const LogReciprocalExpansion& rhs) {
    return lhs.n == rhs.n && lhs.a == rhs.a;
}

namespace {

using MemoKey = std::pair<int, int>;

ExactRat mhs_recurse(int depth, int upper, std::map<MemoKey, ExactRat>& memo) {
    if (depth == 0) {
        return 1;
    }
    if (upper < depth) {
        return 0;
    }
    const MemoKey key{depth, upper};
    const auto found = memo.find(key);
    if (found != memo.end()) {
        return found->second;
    }
    ExactRat sum = 0;
    for (int l = 1; l <= upper; ++l) {
        sum += mhs_recurse(depth - 1, l - 1, memo) / ExactRat(l);
    }
    memo.emplace(key, sum);
    return sum;
}

}  // namespace

ExactRat multiple_harmonic_sum(int depth, int upper) {
    if (depth < 1 || upper < 0) {
        throw std::invalid_argument("multiple_harmonic_sum: needs depth >= 1 and upper >= 0");
    }
    std::map<MemoKey, ExactRat> memo;
    return mhs_recurse(depth, upper, memo);
}

LogReciprocalExpansion harmonic_log_coefficients(int n) {
    if (n < 1) {
        throw std::invalid_argument("harmonic_log_coefficients: needs n >= 1");
    }
    LogReciprocalExpansion result{n, {}};
    result.a[2] = ExactRat(factorial(n - 1));
    for (int i = 3; i <= n + 1; ++i) {
        result.a[i] = ExactRat(factorial(i - 1) * factorial(n - 1)) *
                      multiple_harmonic_sum(i - 2, n - 1);
    }
    return result;
}

LogReciprocalExpansion partition_log_coefficients(int n) {
    if (n < 1) {
        throw std::invalid_argument("partition_log_coefficients: needs n >= 1");
    }
    LogReciprocalExpansion result{n, {}};
    for (int i = 2; i <= n + 1; ++i) {
        result.a[i] = 0;
    }
    const ExactRat n_fact(factorial(n));
    for (const Partition& p : enumerate_partitions(n)) {
        const int r = p.r();
        result.a[r + 1] += n_fact * weights(p).c * ExactRat(factorial(r));
    }
    return result;
}

LogReciprocalExpansion log_base_x_derivative(int n, const ExactRat& ln_a_scale) {
    LogReciprocalExpansion result = partition_log_coefficients(n);
    for (auto& [i, coeff] : result.a) {
        coeff *= ln_a_scale;
    }
    return result;
}

}  // namespace nthderiv
