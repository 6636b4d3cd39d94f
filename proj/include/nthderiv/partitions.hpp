#pragma once

#include "nthderiv/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace nthderiv {

// A partition of `n` in multiplicity form: mult[i-1] is how many times part
// i occurs, so sum(i * mult[i-1]) == n. The vector always has length n
// (trailing zeros kept); the unique partition of 0 has an empty vector.
struct Partition {
    int n = 0;
    std::vector<int> mult;

    // Number of parts (sum of all multiplicities).
    int r() const;

    // Weighted part sum. Always equals n for a valid partition; throws
    // std::invalid_argument when the vector does not actually partition n.
    int pi() const;
};

bool operator==(const Partition& a, const Partition& b);

// The six per-partition weight products used by the derivative formulas:
//
//   c = prod 1/(i^y_i y_i!)   p = prod 1/(i!^y_i y_i!)   q = prod 1/i!^y_i
//
// and the barred variants carrying (-1)^{y_i} per factor, i.e. an overall
// sign of (-1)^r.
struct PartitionWeights {
    ExactRat c, c_bar;
    ExactRat p, p_bar;
    ExactRat q, q_bar;
};

// All partitions of n, each exactly once, generated by recursive descent
// over the largest part. The order is deterministic: descending
// lexicographic in the multiplicity vector read from part n down to part 1,
// i.e. (n) first and the all-ones partition last.
std::vector<Partition> enumerate_partitions(int n);

// p(n) via Euler's pentagonal-number recurrence. Deliberately shares no code
// with enumerate_partitions: it is the independent check on the enumeration.
std::int64_t partition_count(int n);

// r!/prod(y_i!), the multinomial coefficient of the multiplicity vector.
ExactInt multiplicity_multinomial(const Partition& p);

PartitionWeights weights(const Partition& p);

// Partition of p.n + j obtained by adding one part j (j >= 1); r grows by 1.
Partition increment(const Partition& p, int j);

// Partition of p.n - j obtained by removing one part j; requires
// 1 <= j <= p.n and mult[j-1] >= 1. Inverse of increment at the same index.
Partition decrement(const Partition& p, int j);

}  // namespace nthderiv
