#include "nthderiv/jets.hpp"

#include "nthderiv/partitions.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace nthderiv;

namespace {

ExactRat small_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    int num = num_dist(rng);
    while (nonzero && num == 0) {
        num = num_dist(rng);
    }
    return ExactRat(num, den_dist(rng));
}

DerivativeJet random_jet(std::mt19937_64& rng, int order) {
    std::vector<ExactRat> d(static_cast<std::size_t>(order) + 1);
    d[0] = small_rational(rng, true);
    for (int i = 1; i <= order; ++i) {
        d[i] = small_rational(rng, false);
    }
    return DerivativeJet(std::move(d));
}

DerivativeJet constant_one(int order) {
    std::vector<ExactRat> d(static_cast<std::size_t>(order) + 1, ExactRat(0));
    d[0] = 1;
    return DerivativeJet(std::move(d));
}

}  // namespace

TEST_CASE("jets require at least the order-0 value") {
    CHECK_THROWS_AS(DerivativeJet(std::vector<ExactRat>{}), std::invalid_argument);
    CHECK(DerivativeJet({ExactRat(5)}).order() == 0);
}

TEST_CASE("leibniz product") {
    CHECK(leibniz_product(DerivativeJet({1, 2}), DerivativeJet({3, 4})) ==
          DerivativeJet({3, 10}));
    CHECK(leibniz_product(DerivativeJet({1, 0, 0}), DerivativeJet({5, 6, 7})) ==
          DerivativeJet({5, 6, 7}));
    // e^x * e^{-x} = 1: convolution collapses to [1, 0, 0].
    CHECK(leibniz_product(DerivativeJet({1, 1, 1}), DerivativeJet({1, -1, 1})) ==
          DerivativeJet({1, 0, 0}));
    CHECK_THROWS_AS(leibniz_product(DerivativeJet({1}), DerivativeJet({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("reciprocal jet on worked inputs") {
    CHECK(reciprocal_jet(DerivativeJet({2, 1})) == DerivativeJet({ExactRat(1, 2), ExactRat(-1, 4)}));
    CHECK(reciprocal_jet(DerivativeJet({2, 1, 0})) ==
          DerivativeJet({ExactRat(1, 2), ExactRat(-1, 4), ExactRat(1, 4)}));
    // 1/e^x at 0 is the alternating-sign jet of e^{-x}.
    CHECK(reciprocal_jet(DerivativeJet({1, 1, 1})) == DerivativeJet({1, -1, 1}));
    CHECK_THROWS_AS(reciprocal_jet(DerivativeJet({0, 1})), std::domain_error);
}

TEST_CASE("recursive reciprocal on worked inputs") {
    CHECK(oracle_reciprocal_jet(DerivativeJet({2, 1})) ==
          DerivativeJet({ExactRat(1, 2), ExactRat(-1, 4)}));
    CHECK(oracle_reciprocal_jet(DerivativeJet({1, 0, 0})) == DerivativeJet({1, 0, 0}));
    // One recursion step by hand: only the third derivative feeds order 3.
    const DerivativeJet cubic = oracle_reciprocal_jet(DerivativeJet({3, 0, 0, 6}));
    CHECK(cubic.d[3] == ExactRat(-2, 3));
    CHECK_THROWS_AS(oracle_reciprocal_jet(DerivativeJet({0, 1})), std::domain_error);
}

TEST_CASE("quotient jet on worked inputs") {
    // Division by the constant 1 is the identity.
    const DerivativeJet u({ExactRat(4), ExactRat(-5, 2), ExactRat(7)});
    CHECK(quotient_jet(u, constant_one(2)) == u);
    // x * e^{-x} at 0: n-th derivative is n * (-1)^{n-1}.
    CHECK(quotient_jet(DerivativeJet({0, 1, 0}), DerivativeJet({1, 1, 1})) ==
          DerivativeJet({0, 1, -2}));
    // u = [1, 0] reduces the quotient to the reciprocal.
    CHECK(quotient_jet(DerivativeJet({1, 0}), DerivativeJet({2, 1})) ==
          reciprocal_jet(DerivativeJet({2, 1})));
    CHECK_THROWS_AS(quotient_jet(DerivativeJet({1}), DerivativeJet({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_jet(DerivativeJet({1, 2}), DerivativeJet({0, 2})),
                    std::domain_error);
}

TEST_CASE("triangular-solve quotient on worked inputs") {
    CHECK(oracle_quotient_jet(DerivativeJet({6, 0}), DerivativeJet({2, 0})) ==
          DerivativeJet({3, 0}));
    CHECK(oracle_quotient_jet(DerivativeJet({0, 1, 0}), DerivativeJet({1, 1, 1})) ==
          DerivativeJet({0, 1, -2}));
    CHECK(oracle_quotient_jet(DerivativeJet({1, 1, 1}), DerivativeJet({1, 1, 1})) ==
          DerivativeJet({1, 0, 0}));
}

TEST_CASE("log jet on worked inputs") {
    // ln e^x = x at 0.
    const std::vector<ExactRat> linear{1, 0};
    CHECK(log_jet(DerivativeJet({1, 1, 1})) == linear);
    const std::vector<ExactRat> first{2};
    CHECK(log_jet(DerivativeJet({1, 2})) == first);
    const std::vector<ExactRat> ratio{ExactRat(1, 2), ExactRat(-1, 4)};
    CHECK(log_jet(DerivativeJet({2, 1, 0})) == ratio);
    CHECK_THROWS_AS(log_jet(DerivativeJet({5})), std::invalid_argument);
    CHECK_THROWS_AS(log_jet(DerivativeJet({0, 1})), std::domain_error);
}

TEST_CASE("derivatives of 1/v with respect to v") {
    CHECK(reciprocal_derivative_by_v(0, ExactRat(7)) == ExactRat(1, 7));
    CHECK(reciprocal_derivative_by_v(1, ExactRat(2)) == ExactRat(-1, 4));
    CHECK(reciprocal_derivative_by_v(2, ExactRat(1)) == 2);
    CHECK_THROWS_AS(reciprocal_derivative_by_v(1, ExactRat(0)), std::domain_error);
}

TEST_CASE("partition-sum and recursive reciprocal agree on random jets") {
    std::mt19937_64 rng(101);
    for (int order = 0; order <= 9; ++order) {
        for (int trial = 0; trial < 20; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            CHECK(reciprocal_jet(v) == oracle_reciprocal_jet(v));
        }
    }
}

TEST_CASE("quotient agrees with both oracles on random jets") {
    std::mt19937_64 rng(202);
    for (int order = 0; order <= 8; ++order) {
        for (int trial = 0; trial < 15; ++trial) {
            const DerivativeJet u = random_jet(rng, order);
            const DerivativeJet v = random_jet(rng, order);
            const DerivativeJet direct = quotient_jet(u, v);
            CHECK(direct == oracle_quotient_jet(u, v));
            CHECK(direct == leibniz_product(u, reciprocal_jet(v)));
        }
    }
}

TEST_CASE("reciprocal is an involution") {
    std::mt19937_64 rng(303);
    for (int order = 0; order <= 10; ++order) {
        for (int trial = 0; trial < 10; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            CHECK(reciprocal_jet(reciprocal_jet(v)) == v);
        }
    }
}

TEST_CASE("v times 1/v is the constant 1") {
    std::mt19937_64 rng(404);
    for (int order = 0; order <= 10; ++order) {
        for (int trial = 0; trial < 10; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            CHECK(leibniz_product(v, reciprocal_jet(v)) == constant_one(order));
        }
    }
}

TEST_CASE("compact scalar-factor form reproduces the reciprocal terms") {
    // The order-n value must equal n! * sum_k D_r(1/v) * prod (1/y_i!)(v^(i)/i!)^{y_i}
    // with D_r the r-th derivative of 1/v in v itself.
    std::mt19937_64 rng(505);
    for (int order = 0; order <= 8; ++order) {
        for (int trial = 0; trial < 10; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            const DerivativeJet direct = reciprocal_jet(v);
            for (int m = 0; m <= order; ++m) {
                ExactRat sum = 0;
                for (const Partition& p : enumerate_partitions(m)) {
                    ExactRat term = reciprocal_derivative_by_v(p.r(), v.d[0]);
                    for (std::size_t idx = 0; idx < p.mult.size(); ++idx) {
                        const int y = p.mult[idx];
                        if (y == 0) {
                            continue;
                        }
                        const int i = static_cast<int>(idx + 1);
                        term *= rat_pow(v.d[i] / ExactRat(factorial(i)), y) /
                                ExactRat(factorial(y));
                    }
                    sum += term;
                }
                CHECK(direct.d[m] == ExactRat(factorial(m)) * sum);
            }
        }
    }
}

TEST_CASE("first derivative of a many-factor product") {
    // (u_1...u_m)' = (prod u_j) * sum u_j'/u_j, checked through the Leibniz fold.
    std::mt19937_64 rng(606);
    for (int factors = 1; factors <= 5; ++factors) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<DerivativeJet> jets;
            for (int j = 0; j < factors; ++j) {
                jets.push_back(random_jet(rng, 1));
            }
            DerivativeJet product = jets[0];
            for (int j = 1; j < factors; ++j) {
                product = leibniz_product(product, jets[j]);
            }
            ExactRat value = 1;
            ExactRat log_derivative = 0;
            for (const DerivativeJet& jet : jets) {
                value *= jet.d[0];
                log_derivative += jet.d[1] / jet.d[0];
            }
            CHECK(product.d[1] == value * log_derivative);
        }
    }
}

TEST_CASE("log jet agrees with the quotient of v' by v") {
    std::mt19937_64 rng(707);
    for (int order = 1; order <= 10; ++order) {
        for (int trial = 0; trial < 10; ++trial) {
            const DerivativeJet v = random_jet(rng, order);
            std::vector<ExactRat> shifted(v.d.begin() + 1, v.d.end());
            std::vector<ExactRat> truncated(v.d.begin(), v.d.end() - 1);
            const DerivativeJet ratio = quotient_jet(DerivativeJet(std::move(shifted)),
                                                     DerivativeJet(std::move(truncated)));
            CHECK(log_jet(v) == ratio.d);
        }
    }
}
