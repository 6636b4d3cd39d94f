#include "nthderiv/json_io.hpp"

namespace nthderiv {

Json to_json(const Partition& p) {
    return Json{{"n", p.n}, {"mult", p.mult}};
}

Partition partition_from_json(const Json& j) {
    Partition p;
    p.n = j.at("n").get<int>();
    p.mult = j.at("mult").get<std::vector<int>>();
    return p;
}

Json to_json(const DerivativeJet& jet) {
    Json values = Json::array();
    for (const ExactRat& value : jet.d) {
        values.push_back(to_string(value));
    }
    return Json{{"order", jet.order()}, {"d", std::move(values)}};
}

DerivativeJet jet_from_json(const Json& j) {
    std::vector<ExactRat> values;
    for (const auto& entry : j.at("d")) {
        values.push_back(parse_rational(entry.get<std::string>()));
    }
    return DerivativeJet(std::move(values));
}

Json to_json(const IdentityReport& report) {
    return Json{{"name", report.name},
                {"params", report.params},
                {"lhs", to_string(report.lhs)},
                {"rhs", to_string(report.rhs)},
                {"holds", report.holds}};
}

IdentityReport identity_report_from_json(const Json& j) {
    IdentityReport report;
    report.name = j.at("name").get<std::string>();
    report.params = j.at("params").get<std::map<std::string, int>>();
    report.lhs = parse_rational(j.at("lhs").get<std::string>());
    report.rhs = parse_rational(j.at("rhs").get<std::string>());
    report.holds = j.at("holds").get<bool>();
    return report;
}

Json to_json(const LogReciprocalExpansion& expansion) {
    Json coeffs = Json::object();
    for (const auto& [i, value] : expansion.a) {
        coeffs[std::to_string(i)] = to_string(value);
    }
    return Json{{"n", expansion.n}, {"a", std::move(coeffs)}};
}

LogReciprocalExpansion log_expansion_from_json(const Json& j) {
    LogReciprocalExpansion expansion;
    expansion.n = j.at("n").get<int>();
    for (const auto& [key, value] : j.at("a").items()) {
        expansion.a[std::stoi(key)] = parse_rational(value.get<std::string>());
    }
    return expansion;
}

}  // namespace nthderiv
