#include "nthderiv/jets.hpp"

#include "nthderiv/partitions.hpp"

#include <stdexcept>
#include <utility>

namespace nthderiv {

DerivativeJet::DerivativeJet(std::vector<ExactRat> values) : d(std::move(values)) {
    if (d.empty()) {
        throw std::invalid_argument("DerivativeJet: needs at least the order-0 value");
    }
}

bool operator==(const DerivativeJet& a, const DerivativeJet& b) {
    return a.d == b.d;
}

namespace {

void require_equal_orders(const DerivativeJet& u, const DerivativeJet& v) {
    if (u.d.size() != v.d.size()) {
        throw std::invalid_argument("jet orders do not match");
    }
}

void require_nonzero_base(const DerivativeJet& v) {
    if (v.d[0] == 0) {
        throw std::domain_error("jet rule requires v != 0 at the base point");
    }
}

// sum over partitions y of m of binom(r; y)(-1)^r / v^{r+1} prod [v^(i)/i!]^{y_i}
// This is (1/v)^(m) / m!; it is also the inner sum of the quotient rule.
ExactRat reciprocal_partition_sum(const DerivativeJet& v, int m) {
    ExactRat sum = 0;
    for (const Partition& part : enumerate_partitions(m)) {
        const int r = part.r();
        ExactRat term(multiplicity_multinomial(part));
        if (r % 2 == 1) {
            term = -term;
        }
        term /= rat_pow(v.d[0], r + 1);
        for (std::size_t idx = 0; idx < part.mult.size(); ++idx) {
            const int y = part.mult[idx];
            if (y == 0) {
                continue;
            }
            const int i = static_cast<int>(idx + 1);
            term *= rat_pow(v.d[i] / ExactRat(factorial(i)), y);
        }
        sum += term;
    }
    return sum;
}

}  // namespace

DerivativeJet leibniz_product(const DerivativeJet& u, const DerivativeJet& v) {
    require_equal_orders(u, v);
    std::vector<ExactRat> out(u.d.size());
    for (int m = 0; m <= u.order(); ++m) {
        ExactRat sum = 0;
        for (int k = 0; k <= m; ++k) {
            sum += ExactRat(binomial(m, k)) * u.d[k] * v.d[m - k];
        }
        out[m] = sum;
    }
    return DerivativeJet(std::move(out));
}

DerivativeJet reciprocal_jet(const DerivativeJet& v) {
    require_nonzero_base(v);
    std::vector<ExactRat> out(v.d.size());
    for (int m = 0; m <= v.order(); ++m) {
        out[m] = ExactRat(factorial(m)) * reciprocal_partition_sum(v, m);
    }
    return DerivativeJet(std::move(out));
}

DerivativeJet oracle_reciprocal_jet(const DerivativeJet& v) {
    require_nonzero_base(v);
    std::vector<ExactRat> w(v.d.size());
    w[0] = ExactRat(1) / v.d[0];
    for (int m = 1; m <= v.order(); ++m) {
        ExactRat sum = 0;
        for (int j = 0; j < m; ++j) {
            sum += v.d[m - j] / ExactRat(factorial(m - j)) * w[j] / ExactRat(factorial(j));
        }
        w[m] = -ExactRat(factorial(m)) / v.d[0] * sum;
    }
    return DerivativeJet(std::move(w));
}

DerivativeJet quotient_jet(const DerivativeJet& u, const DerivativeJet& v) {
    require_equal_orders(u, v);
    require_nonzero_base(v);
    // The inner sums depend only on l, not on m; evaluate each once.
    std::vector<ExactRat> inner(v.d.size());
    for (int l = 0; l <= v.order(); ++l) {
        inner[l] = reciprocal_partition_sum(v, l);
    }
    std::vector<ExactRat> out(u.d.size());
    for (int m = 0; m <= u.order(); ++m) {
        ExactRat sum = 0;
        for (int l = 0; l <= m; ++l) {
            sum += u.d[m - l] / ExactRat(factorial(m - l)) * inner[l];
        }
        out[m] = ExactRat(factorial(m)) * sum;
    }
    return DerivativeJet(std::move(out));
}

DerivativeJet oracle_quotient_jet(const DerivativeJet& u, const DerivativeJet& v) {
    require_equal_orders(u, v);
    require_nonzero_base(v);
    std::vector<ExactRat> w(u.d.size());
    for (int m = 0; m <= u.order(); ++m) {
        ExactRat sum = u.d[m];
        for (int k = 1; k <= m; ++k) {
            sum -= ExactRat(binomial(m, k)) * v.d[k] * w[m - k];
        }
        w[m] = sum / v.d[0];
    }
    return DerivativeJet(std::move(w));
}

std::vector<ExactRat> log_jet(const DerivativeJet& v) {
    require_nonzero_base(v);
    if (v.order() < 1) {
        throw std::invalid_argument("log_jet: needs order >= 1");
    }
    std::vector<ExactRat> out(static_cast<std::size_t>(v.order()));
    for (int m = 1; m <= v.order(); ++m) {
        ExactRat sum = 0;
        for (const Partition& part : enumerate_partitions(m)) {
            const int r = part.r();
            ExactRat term(factorial(r - 1));
            if (r % 2 == 0) {
                term = -term;
            }
            term /= rat_pow(v.d[0], r);
            for (std::size_t idx = 0; idx < part.mult.size(); ++idx) {
                const int y = part.mult[idx];
                if (y == 0) {
                    continue;
                }
                const int i = static_cast<int>(idx + 1);
                term *= rat_pow(v.d[i] / ExactRat(factorial(i)), y) / ExactRat(factorial(y));
            }
            sum += term;
        }
        out[m - 1] = ExactRat(factorial(m)) * sum;
    }
    return out;
}

ExactRat reciprocal_derivative_by_v(int r, const ExactRat& v0) {
    if (r < 0) {
        throw std::invalid_argument("reciprocal_derivative_by_v: r must be non-negative");
    }
    if (v0 == 0) {
        throw std::domain_error("reciprocal_derivative_by_v: requires v != 0");
    }
    ExactRat result(factorial(r));
    if (r % 2 == 1) {
        result = -result;
    }
    return result / rat_pow(v0, r + 1);
}

}  // namespace nthderiv
