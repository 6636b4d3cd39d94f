#include "nthderiv/verify.hpp"

#include "nthderiv/identities.hpp"
#include "nthderiv/jets.hpp"
#include "nthderiv/partitions.hpp"
#include "nthderiv/special.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace nthderiv {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

ExactRat random_small_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    int num = num_dist(rng);
    while (nonzero && num == 0) {
        num = num_dist(rng);
    }
    return ExactRat(num, den_dist(rng));
}

// Jet with entries num/den, |num| <= 9, 1 <= den <= 9, and d[0] != 0.
DerivativeJet random_jet(std::mt19937_64& rng, int order) {
    std::vector<ExactRat> d(static_cast<std::size_t>(order) + 1);
    d[0] = random_small_rational(rng, true);
    for (int i = 1; i <= order; ++i) {
        d[i] = random_small_rational(rng, false);
    }
    return DerivativeJet(std::move(d));
}

CheckResult check_reciprocal_oracle_equivalence() {
    const auto start = Clock::now();
    constexpr int kMaxOrder = 12;
    constexpr int kJetsPerOrder = 50;
    constexpr long kBudgetMs = 5000;
    std::mt19937_64 rng(0x5eed0001);
    int jets = 0;
    bool ok = true;
    for (int order = 0; order <= kMaxOrder && ok; ++order) {
        for (int trial = 0; trial < kJetsPerOrder && ok; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            ok = reciprocal_jet(v) == oracle_reciprocal_jet(v);
            ++jets;
        }
    }
    const long ms = elapsed_ms(start);
    std::ostringstream detail;
    detail << jets << " jets, orders <= " << kMaxOrder << ", " << ms << " ms";
    return {"reciprocal-oracle-equivalence", detail.str(), ok && ms <= kBudgetMs};
}

CheckResult check_quotient_three_way_agreement() {
    const auto start = Clock::now();
    constexpr int kMaxOrder = 10;
    constexpr int kPairsPerOrder = 50;
    constexpr long kBudgetMs = 5000;
    std::mt19937_64 rng(0x5eed0002);
    int pairs = 0;
    bool ok = true;
    for (int order = 0; order <= kMaxOrder && ok; ++order) {
        for (int trial = 0; trial < kPairsPerOrder && ok; ++trial) {
            const DerivativeJet u = random_jet(rng, order);
            const DerivativeJet v = random_jet(rng, order);
            const DerivativeJet direct = quotient_jet(u, v);
            ok = direct == oracle_quotient_jet(u, v) &&
                 direct == leibniz_product(u, reciprocal_jet(v));
            ++pairs;
        }
    }
    const long ms = elapsed_ms(start);
    std::ostringstream detail;
    detail << pairs << " jet pairs, orders <= " << kMaxOrder << ", " << ms << " ms";
    return {"quotient-three-way-agreement", detail.str(), ok && ms <= kBudgetMs};
}

CheckResult check_reciprocal_base_cases() {
    int cases = 0;
    bool ok = true;
    for (int p0 = -4; p0 <= 4 && ok; ++p0) {
        if (p0 == 0) {
            continue;
        }
        for (int q0 = 1; q0 <= 4 && ok; ++q0) {
            const ExactRat v0(p0, q0);
            ok = reciprocal_jet(DerivativeJet({v0})).d[0] == ExactRat(1) / v0;
            ++cases;
            for (int p1 = -4; p1 <= 4 && ok; ++p1) {
                for (int q1 = 1; q1 <= 4 && ok; ++q1) {
                    const ExactRat v1(p1, q1);
                    const DerivativeJet result = reciprocal_jet(DerivativeJet({v0, v1}));
                    ok = result.d[0] == ExactRat(1) / v0 && result.d[1] == -v1 / (v0 * v0);
                    ++cases;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << cases << " rational inputs";
    return {"reciprocal-base-cases", detail.str(), ok};
}

CheckResult check_identity_sweeps() {
    const auto start = Clock::now();
    constexpr long kBudgetMs = 30000;
    bool ok = true;
    int instances = 0;
    for (int n = 0; n <= 25 && ok; ++n) {
        const IdentityReport exp_report = exponential_identity(n);
        ExactRat expected = ExactRat(1) / ExactRat(factorial(n));
        if (n % 2 == 1) {
            expected = -expected;
        }
        ok = exp_report.holds && exp_report.lhs == expected;
        ++instances;
    }
    for (int n = 0; n <= 15 && ok; ++n) {
        for (int m = 1; m <= 10 && ok; ++m) {
            ok = power_identity(n, m).holds && inverse_power_identity(n, m).holds;
            instances += 2;
        }
    }
    for (int n = 1; n <= 15 && ok; ++n) {
        ok = central_binomial_corollary(n).holds;
        ++instances;
    }
    for (int n = 0; n <= 25 && ok; ++n) {
        const IdentityReport alt = alternating_corollary(n);
        const ExactRat expected = n == 0 ? ExactRat(1) : n == 1 ? ExactRat(-1) : ExactRat(0);
        ok = alt.holds && alt.lhs == expected;
        ++instances;
    }
    const long ms = elapsed_ms(start);
    std::ostringstream detail;
    detail << instances << " identity instances, " << ms << " ms";
    return {"identity-sweeps", detail.str(), ok && ms <= kBudgetMs};
}

CheckResult check_recurrence_composition_equivalence() {
    bool ok = true;
    int instances = 0;
    for (int m = 1; m <= 12 && ok; ++m) {
        for (const Partition& y : enumerate_partitions(m)) {
            const IdentityReport recurrence = multinomial_recurrence(y);
            const IdentityReport composition = bounded_composition_identity(y);
            ok = recurrence.holds && composition.holds && recurrence.lhs == composition.lhs;
            ++instances;
            if (!ok) {
                break;
            }
        }
    }
    std::ostringstream detail;
    detail << instances << " partitions of m <= 12";
    return {"multinomial-recurrence-equivalence", detail.str(), ok};
}

CheckResult check_log_coefficient_cross_check() {
    const auto start = Clock::now();
    constexpr long kBudgetMs = 2000;
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n) {
        const LogReciprocalExpansion harmonic = harmonic_log_coefficients(n);
        const LogReciprocalExpansion partition = partition_log_coefficients(n);
        ok = harmonic == partition && harmonic.a.at(2) == ExactRat(factorial(n - 1)) &&
             harmonic.a.at(n + 1) == ExactRat(factorial(n));
    }
    const long ms = elapsed_ms(start);
    std::ostringstream detail;
    detail << "orders 1..10, " << ms << " ms";
    return {"log-coefficient-cross-check", detail.str(), ok && ms <= kBudgetMs};
}

CheckResult check_log_derivative_consistency() {
    constexpr int kMaxOrder = 10;
    constexpr int kJetsPerOrder = 25;
    std::mt19937_64 rng(0x5eed0007);
    int jets = 0;
    bool ok = true;
    for (int order = 1; order <= kMaxOrder && ok; ++order) {
        for (int trial = 0; trial < kJetsPerOrder && ok; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            // v'/v as jets of order n-1.
            std::vector<ExactRat> shifted(v.d.begin() + 1, v.d.end());
            std::vector<ExactRat> truncated(v.d.begin(), v.d.end() - 1);
            const DerivativeJet ratio =
                quotient_jet(DerivativeJet(std::move(shifted)), DerivativeJet(std::move(truncated)));
            ok = log_jet(v) == ratio.d;
            ++jets;
        }
    }
    std::ostringstream detail;
    detail << jets << " jets, orders <= " << kMaxOrder;
    return {"log-derivative-consistency", detail.str(), ok};
}

CheckResult check_partition_infrastructure() {
    bool ok = true;
    std::int64_t enumerated = 0;
    for (int n = 0; n <= 30 && ok; ++n) {
        const std::vector<Partition> parts = enumerate_partitions(n);
        enumerated += static_cast<std::int64_t>(parts.size());
        ok = static_cast<std::int64_t>(parts.size()) == partition_count(n);
        if (!ok) {
            break;
        }
        std::set<std::vector<int>> seen;
        for (const Partition& p : parts) {
            ok = ok && p.pi() == n && p.mult.size() == static_cast<std::size_t>(n);
            seen.insert(p.mult);
        }
        ok = ok && seen.size() == parts.size();
    }
    std::ostringstream detail;
    detail << enumerated << " partitions over n <= 30 vs pentagonal recurrence";
    return {"partition-infrastructure", detail.str(), ok};
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks() {
    return {
        check_reciprocal_oracle_equivalence(),
        check_quotient_three_way_agreement(),
        check_reciprocal_base_cases(),
        check_identity_sweeps(),
        check_recurrence_composition_equivalence(),
        check_log_coefficient_cross_check(),
        check_log_derivative_consistency(),
        check_partition_infrastructure(),
    };
}

}  // namespace nthderiv
