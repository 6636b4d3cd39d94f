#include "nthderiv/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace nthderiv {

int Partition::r() const {
    return std::accumulate(mult.begin(), mult.end(), 0);
}

int Partition::pi() const {
    int sum = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        sum += static_cast<int>(i + 1) * mult[i];
    }
    if (sum != n) {
        throw std::invalid_argument("Partition: multiplicities do not sum to target");
    }
    return sum;
}

bool operator==(const Partition& a, const Partition& b) {
    return a.n == b.n && a.mult == b.mult;
}

namespace {

void descend(int remaining, int largest_allowed, Partition& current,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, largest_allowed); part >= 1; --part) {
        ++current.mult[part - 1];
        descend(remaining - part, part, current, out);
        --current.mult[part - 1];
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    }
    std::vector<Partition> out;
    Partition current{n, std::vector<int>(static_cast<std::size_t>(n), 0)};
    descend(n, n, current, out);
    return out;
}

std::int64_t partition_count(int n) {
    if (n < 0) {
        throw std::invalid_argument("partition_count: n must be non-negative");
    }
    // p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) {
                break;
            }
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[m - g1];
            if (g2 <= m) {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    return p[n];
}

ExactInt multiplicity_multinomial(const Partition& p) {
    p.pi();  // validate
    return multinomial(p.mult);
}

PartitionWeights weights(const Partition& p) {
    p.pi();  // validate
    PartitionWeights w{1, 1, 1, 1, 1, 1};
    for (std::size_t idx = 0; idx < p.mult.size(); ++idx) {
        const int y = p.mult[idx];
        if (y == 0) {
            continue;
        }
        const int i = static_cast<int>(idx + 1);
        const ExactInt i_pow = boost::multiprecision::pow(ExactInt(i), static_cast<unsigned>(y));
        const ExactInt ifact_pow =
            boost::multiprecision::pow(factorial(i), static_cast<unsigned>(y));
        const ExactInt y_fact = factorial(y);
        const int sign = (y % 2 == 0) ? 1 : -1;

        w.c /= ExactRat(i_pow * y_fact);
        w.p /= ExactRat(ifact_pow * y_fact);
        w.q /= ExactRat(ifact_pow);
        w.c_bar *= ExactRat(ExactInt(sign)) / ExactRat(i_pow * y_fact);
        w.p_bar *= ExactRat(ExactInt(sign)) / ExactRat(ifact_pow * y_fact);
        w.q_bar *= ExactRat(ExactInt(sign)) / ExactRat(ifact_pow);
    }
    return w;
}

Partition increment(const Partition& p, int j) {
    if (j < 1) {
        throw std::invalid_argument("increment: part index must be >= 1");
    }
    p.pi();  // validate
    Partition result{p.n + j, p.mult};
    result.mult.resize(static_cast<std::size_t>(result.n), 0);
    ++result.mult[j - 1];
    return result;
}

Partition decrement(const Partition& p, int j) {
    if (j < 1 || j > p.n) {
        throw std::invalid_argument("decrement: part index out of range");
    }
    p.pi();  // validate
    if (p.mult[j - 1] < 1) {
        throw std::invalid_argument("decrement: part has multiplicity zero");
    }
    Partition result{p.n - j, p.mult};
    --result.mult[j - 1];
    // Parts larger than the new target cannot occur once the sum shrinks.
    result.mult.resize(static_cast<std::size_t>(result.n));
    return result;
}

}  // namespace nthderiv
