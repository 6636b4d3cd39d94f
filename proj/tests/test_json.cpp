#include "nthderiv/json_io.hpp"

#include <doctest.h>

using namespace nthderiv;

TEST_CASE("partition schema") {
    const Partition p{4, {2, 1, 0, 0}};
    const Json j = to_json(p);
    CHECK(j.at("n") == 4);
    CHECK(j.at("mult").size() == 4);
    CHECK(partition_from_json(j) == p);
    CHECK(j.dump() == R"({"n":4,"mult":[2,1,0,0]})");
}

TEST_CASE("jet schema") {
    const DerivativeJet jet({ExactRat(1, 2), ExactRat(-1, 4), ExactRat(1, 4)});
    const Json j = to_json(jet);
    CHECK(j.at("order") == 2);
    CHECK(j.at("d")[1] == "-1/4");
    CHECK(jet_from_json(j) == jet);
    CHECK(j.dump() == R"({"order":2,"d":["1/2","-1/4","1/4"]})");
}

TEST_CASE("identity report schema") {
    IdentityReport report;
    report.name = "power";
    report.params = {{"m", 5}, {"n", 1}};
    report.lhs = ExactRat(-5);
    report.rhs = ExactRat(-5);
    report.holds = true;
    const Json j = to_json(report);
    CHECK(j.at("holds") == true);
    CHECK(j.at("lhs") == "-5");
    CHECK(identity_report_from_json(j) == report);
}

TEST_CASE("log expansion schema") {
    LogReciprocalExpansion expansion;
    expansion.n = 2;
    expansion.a[2] = 1;
    expansion.a[3] = 2;
    const Json j = to_json(expansion);
    CHECK(j.at("a").at("3") == "2");
    CHECK(log_expansion_from_json(j) == expansion);
    CHECK(j.dump() == R"({"n":2,"a":{"2":"1","3":"2"}})");
}

TEST_CASE("round trips over generated values") {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(partition_from_json(to_json(p)) == p);
        }
    }
    for (int n = 1; n <= 6; ++n) {
        const LogReciprocalExpansion e = partition_log_coefficients(n);
        CHECK(log_expansion_from_json(to_json(e)) == e);
        const IdentityReport report = exponential_identity(n);
        CHECK(identity_report_from_json(to_json(report)) == report);
    }
}
