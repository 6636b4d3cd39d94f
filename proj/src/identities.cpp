#include "nthderiv/identities.hpp"

#include <functional>
#include <stdexcept>

namespace nthderiv {

bool operator==(const IdentityReport& a, const IdentityReport& b) {
    return a.name == b.name && a.params == b.params && a.lhs == b.lhs && a.rhs == b.rhs &&
           a.holds == b.holds;
}

namespace {

// binom(r; y) (-1)^r prod part_factor(i)^{y_i}
ExactRat alternating_term(const Partition& p, const std::function<ExactRat(int)>& part_factor) {
    const int r = p.r();
    ExactRat term(multiplicity_multinomial(p));
    if (r % 2 == 1) {
        term = -term;
    }
    for (std::size_t idx = 0; idx < p.mult.size(); ++idx) {
        const int y = p.mult[idx];
        if (y == 0) {
            continue;
        }
        term *= rat_pow(part_factor(static_cast<int>(idx + 1)), y);
    }
    return term;
}

ExactRat alternating_sum(int n, const std::function<ExactRat(int)>& part_factor) {
    ExactRat sum = 0;
    for (const Partition& p : enumerate_partitions(n)) {
        sum += alternating_term(p, part_factor);
    }
    return sum;
}

IdentityReport make_report(std::string name, std::map<std::string, int> params, ExactRat lhs,
                           ExactRat rhs) {
    IdentityReport report;
    report.name = std::move(name);
    report.params = std::move(params);
    report.holds = lhs == rhs;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

void require_nonempty(const Partition& y, const char* who) {
    y.pi();  // validate
    if (y.r() == 0) {
        throw std::invalid_argument(std::string(who) + ": needs a nonempty partition");
    }
}

}  // namespace

ExactRat exponential_term(const Partition& p) {
    return ExactRat(multiplicity_multinomial(p)) * weights(p).q_bar;
}

ExactRat power_term(const Partition& p, int m) {
    return alternating_term(p, [m](int i) { return ExactRat(binomial(m, i)); });
}

ExactRat inverse_power_term(const Partition& p, int m) {
    return alternating_term(p, [m](int i) { return ExactRat(binomial(i + m - 1, m - 1)); });
}

IdentityReport exponential_identity(int n) {
    if (n < 0) {
        throw std::invalid_argument("exponential_identity: n must be non-negative");
    }
    ExactRat lhs = 0;
    for (const Partition& p : enumerate_partitions(n)) {
        lhs += exponential_term(p);
    }
    ExactRat rhs = ExactRat(1) / ExactRat(factorial(n));
    if (n % 2 == 1) {
        rhs = -rhs;
    }
    return make_report("exponential", {{"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport power_identity(int n, int m) {
    if (n < 0 || m < 1) {
        throw std::invalid_argument("power_identity: needs n >= 0 and m >= 1");
    }
    ExactRat lhs = alternating_sum(n, [m](int i) { return ExactRat(binomial(m, i)); });
    ExactRat rhs(binomial(n + m - 1, m - 1));
    if (n % 2 == 1) {
        rhs = -rhs;
    }
    return make_report("power", {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport central_binomial_corollary(int n) {
    if (n < 1) {
        throw std::invalid_argument("central_binomial_corollary: needs n >= 1");
    }
    IdentityReport report = power_identity(n, n);
    ExactRat central(binomial(2 * n - 1, n - 1));
    if (n % 2 == 1) {
        central = -central;
    }
    report.name = "central_binomial";
    report.params = {{"n", n}};
    report.holds = report.holds && report.rhs == central;
    return report;
}

IdentityReport inverse_power_identity(int n, int m) {
    if (n < 0 || m < 1) {
        throw std::invalid_argument("inverse_power_identity: needs n >= 0 and m >= 1");
    }
    ExactRat lhs =
        alternating_sum(n, [m](int i) { return ExactRat(binomial(i + m - 1, m - 1)); });
    ExactRat rhs(binomial(m, n));
    if (n % 2 == 1) {
        rhs = -rhs;
    }
    return make_report("inverse_power", {{"m", m}, {"n", n}}, std::move(lhs), std::move(rhs));
}

IdentityReport alternating_corollary(int n) {
    IdentityReport report = inverse_power_identity(n, 1);
    report.name = "alternating";
    report.params = {{"n", n}};
    return report;
}

IdentityReport multinomial_recurrence(const Partition& y) {
    require_nonempty(y, "multinomial_recurrence");
    ExactRat lhs = 0;
    for (std::size_t idx = 0; idx < y.mult.size(); ++idx) {
        if (y.mult[idx] == 0) {
            continue;
        }
        std::vector<int> decremented = y.mult;
        --decremented[idx];
        lhs += ExactRat(multinomial(decremented));
    }
    ExactRat rhs(multiplicity_multinomial(y));
    return make_report("multinomial_recurrence", {{"m", y.n}}, std::move(lhs), std::move(rhs));
}

IdentityReport bounded_composition_identity(const Partition& y) {
    require_nonempty(y, "bounded_composition_identity");
    const int target = y.r() - 1;
    ExactRat lhs = 0;
    // Walk the box prod [0, y_i] with an odometer and keep the compositions
    // whose entries sum to r-1. Instance sizes are tiny.
    std::vector<int> phi(y.mult.size(), 0);
    while (true) {
        int sum = 0;
        for (int v : phi) {
            sum += v;
        }
        if (sum == target) {
            lhs += ExactRat(multinomial(phi));
        }
        std::size_t pos = 0;
        while (pos < phi.size() && phi[pos] == y.mult[pos]) {
            phi[pos] = 0;
            ++pos;
        }
        if (pos == phi.size()) {
            break;
        }
        ++phi[pos];
    }
    ExactRat rhs(multiplicity_multinomial(y));
    return make_report("bounded_composition", {{"m", y.n}}, std::move(lhs), std::move(rhs));
}

}  // namespace nthderiv
