#include "nthderiv/identities.hpp"
#include "nthderiv/jets.hpp"
#include "nthderiv/json_io.hpp"
#include "nthderiv/partitions.hpp"
#include "nthderiv/special.hpp"
#include "nthderiv/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nthderiv::DerivativeJet;
using nthderiv::ExactRat;
using nthderiv::IdentityReport;
using nthderiv::Json;
using nthderiv::Partition;

enum class Format { pretty, json, csv };

Format parse_format(const std::string& name) {
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    return Format::pretty;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join_mult(const std::vector<int>& mult) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (i > 0) {
            out << ';';
        }
        out << mult[i];
    }
    return out.str();
}

std::string format_params(const std::map<std::string, int>& params, char sep) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) {
            out << sep;
        }
        out << key << '=' << value;
        first = false;
    }
    return out.str();
}

void emit_json(const Json& doc) {
    std::cout << doc.dump(2) << "\n";
}

int run_partitions(int n, Format format) {
    if (n < 0) {
        std::cerr << "error: n must be non-negative\n";
        return 2;
    }
    const std::vector<Partition> parts = nthderiv::enumerate_partitions(n);
    if (format == Format::json) {
        Json records = Json::array();
        for (const Partition& p : parts) {
            const nthderiv::PartitionWeights w = nthderiv::weights(p);
            Json record = nthderiv::to_json(p);
            record["r"] = p.r();
            record["pi"] = p.pi();
            record["multinomial"] = nthderiv::to_string(nthderiv::multiplicity_multinomial(p));
            record["weights"] = Json{{"c", nthderiv::to_string(w.c)},
                                     {"c_bar", nthderiv::to_string(w.c_bar)},
                                     {"p", nthderiv::to_string(w.p)},
                                     {"p_bar", nthderiv::to_string(w.p_bar)},
                                     {"q", nthderiv::to_string(w.q)},
                                     {"q_bar", nthderiv::to_string(w.q_bar)}};
            records.push_back(std::move(record));
        }
        emit_json(Json{{"n", n},
                       {"count", static_cast<std::int64_t>(parts.size())},
                       {"partitions", std::move(records)}});
        return 0;
    }
    if (format == Format::csv) {
        std::cout << "n,mult,r,pi,multinomial,c,c_bar,p,p_bar,q,q_bar\n";
        for (const Partition& p : parts) {
            const nthderiv::PartitionWeights w = nthderiv::weights(p);
            std::cout << p.n << ',' << join_mult(p.mult) << ',' << p.r() << ',' << p.pi() << ','
                      << nthderiv::to_string(nthderiv::multiplicity_multinomial(p)) << ','
                      << nthderiv::to_string(w.c) << ',' << nthderiv::to_string(w.c_bar) << ','
                      << nthderiv::to_string(w.p) << ',' << nthderiv::to_string(w.p_bar) << ','
                      << nthderiv::to_string(w.q) << ',' << nthderiv::to_string(w.q_bar) << "\n";
        }
        return 0;
    }
    std::cout << "partitions of " << n << " (count " << parts.size() << ")\n";
    for (const Partition& p : parts) {
        const nthderiv::PartitionWeights w = nthderiv::weights(p);
        std::cout << "[" << join_mult(p.mult) << "] r=" << p.r() << " pi=" << p.pi()
                  << " multinomial=" << nthderiv::to_string(nthderiv::multiplicity_multinomial(p))
                  << " c=" << nthderiv::to_string(w.c)
                  << " c_bar=" << nthderiv::to_string(w.c_bar)
                  << " p=" << nthderiv::to_string(w.p)
                  << " p_bar=" << nthderiv::to_string(w.p_bar)
                  << " q=" << nthderiv::to_string(w.q)
                  << " q_bar=" << nthderiv::to_string(w.q_bar) << "\n";
    }
    return 0;
}

int emit_jet_result(const std::string& op, const Json& inputs, const DerivativeJet& result,
                    bool verified, Format format) {
    if (format == Format::json) {
        Json doc{{"op", op}};
        for (const auto& [key, value] : inputs.items()) {
            doc[key] = value;
        }
        doc["result"] = nthderiv::to_json(result);
        doc["verified"] = verified;
        emit_json(doc);
    } else if (format == Format::csv) {
        std::cout << "order,value,verified\n";
        for (std::size_t i = 0; i < result.d.size(); ++i) {
            std::cout << i << ',' << nthderiv::to_string(result.d[i]) << ','
                      << (verified ? "true" : "false") << "\n";
        }
    } else {
        std::cout << op << " jet (order " << result.order() << ")\n";
        for (std::size_t i = 0; i < result.d.size(); ++i) {
            std::cout << "d[" << i << "] = " << nthderiv::to_string(result.d[i]) << "\n";
        }
        std::cout << "verified: " << (verified ? "true" : "false") << "\n";
    }
    return verified ? 0 : 1;
}

int run_reciprocal(const std::string& v_text, Format format) {
    const DerivativeJet v(nthderiv::parse_rational_list(v_text));
    const DerivativeJet result = nthderiv::reciprocal_jet(v);
    const bool verified = result == nthderiv::oracle_reciprocal_jet(v);
    return emit_jet_result("reciprocal", Json{{"v", nthderiv::to_json(v)}}, result, verified,
                           format);
}

int run_quotient(const std::string& u_text, const std::string& v_text, Format format) {
    const DerivativeJet u(nthderiv::parse_rational_list(u_text));
    const DerivativeJet v(nthderiv::parse_rational_list(v_text));
    const DerivativeJet result = nthderiv::quotient_jet(u, v);
    const bool verified = result == nthderiv::oracle_quotient_jet(u, v) &&
                          result == nthderiv::leibniz_product(u, nthderiv::reciprocal_jet(v));
    return emit_jet_result(
        "quotient", Json{{"u", nthderiv::to_json(u)}, {"v", nthderiv::to_json(v)}}, result,
        verified, format);
}

std::vector<IdentityReport> sweep_one(const std::string& which, int max_n, int max_m) {
    std::vector<IdentityReport> reports;
    if (which == "exp") {
        for (int n = 0; n <= max_n; ++n) {
            reports.push_back(nthderiv::exponential_identity(n));
        }
    } else if (which == "power") {
        for (int n = 0; n <= max_n; ++n) {
            for (int m = 1; m <= max_m; ++m) {
                reports.push_back(nthderiv::power_identity(n, m));
            }
        }
    } else if (which == "central") {
        for (int n = 1; n <= max_n; ++n) {
            reports.push_back(nthderiv::central_binomial_corollary(n));
        }
    } else if (which == "inverse-power") {
        for (int n = 0; n <= max_n; ++n) {
            for (int m = 1; m <= max_m; ++m) {
                reports.push_back(nthderiv::inverse_power_identity(n, m));
            }
        }
    } else if (which == "alternating") {
        for (int n = 0; n <= max_n; ++n) {
            reports.push_back(nthderiv::alternating_corollary(n));
        }
    } else if (which == "recurrence" || which == "composition") {
        for (int m = 1; m <= max_n; ++m) {
            const std::vector<Partition> parts = nthderiv::enumerate_partitions(m);
            for (std::size_t k = 0; k < parts.size(); ++k) {
                IdentityReport report = which == "recurrence"
                                            ? nthderiv::multinomial_recurrence(parts[k])
                                            : nthderiv::bounded_composition_identity(parts[k]);
                report.params["k"] = static_cast<int>(k);
                reports.push_back(std::move(report));
            }
        }
    } else {
        throw std::invalid_argument("unknown identity: " + which);
    }
    return reports;
}

int run_identities(const std::string& which, int max_n, int max_m, Format format) {
    if (max_n < 0 || max_m < 1) {
        std::cerr << "error: needs --max-n >= 0 and --max-m >= 1\n";
        return 2;
    }
    static const std::vector<std::string> kAll = {
        "exp", "power", "central", "inverse-power", "alternating", "recurrence", "composition"};
    std::vector<IdentityReport> reports;
    if (which == "all") {
        for (const std::string& name : kAll) {
            for (IdentityReport& report : sweep_one(name, max_n, max_m)) {
                reports.push_back(std::move(report));
            }
        }
    } else {
        reports = sweep_one(which, max_n, max_m);
    }
    bool all_hold = true;
    for (const IdentityReport& report : reports) {
        all_hold = all_hold && report.holds;
    }
    if (format == Format::json) {
        Json records = Json::array();
        for (const IdentityReport& report : reports) {
            records.push_back(nthderiv::to_json(report));
        }
        emit_json(Json{{"identity", which},
                       {"count", static_cast<std::int64_t>(reports.size())},
                       {"all_hold", all_hold},
                       {"reports", std::move(records)}});
    } else if (format == Format::csv) {
        std::cout << "name,params,lhs,rhs,holds\n";
        for (const IdentityReport& report : reports) {
            std::cout << report.name << ',' << csv_escape(format_params(report.params, ';'))
                      << ',' << nthderiv::to_string(report.lhs) << ','
                      << nthderiv::to_string(report.rhs) << ','
                      << (report.holds ? "true" : "false") << "\n";
        }
    } else {
        for (const IdentityReport& report : reports) {
            std::cout << report.name << ' ' << format_params(report.params, ' ')
                      << ": lhs=" << nthderiv::to_string(report.lhs)
                      << " rhs=" << nthderiv::to_string(report.rhs)
                      << " holds=" << (report.holds ? "true" : "false") << "\n";
        }
        std::cout << (all_hold ? "all hold" : "FAILURES present") << " (" << reports.size()
                  << " instances)\n";
    }
    return all_hold ? 0 : 1;
}

int run_logcoeffs(int n, Format format) {
    if (n < 1) {
        std::cerr << "error: n must be >= 1\n";
        return 2;
    }
    const nthderiv::LogReciprocalExpansion partition = nthderiv::partition_log_coefficients(n);
    const nthderiv::LogReciprocalExpansion harmonic = nthderiv::harmonic_log_coefficients(n);
    const bool match = partition == harmonic;
    // Work per route: one term per partition of n versus one chain of nested
    // harmonic summands per coefficient.
    const std::int64_t partition_terms = nthderiv::partition_count(n);
    nthderiv::ExactInt harmonic_terms = 0;
    for (int i = 2; i <= n + 1; ++i) {
        harmonic_terms += nthderiv::binomial(n - 1, i - 2);
    }
    if (format == Format::json) {
        emit_json(Json{{"n", n},
                       {"partition", nthderiv::to_json(partition)},
                       {"harmonic", nthderiv::to_json(harmonic)},
                       {"match", match},
                       {"terms",
                        Json{{"partition", partition_terms},
                             {"harmonic", nthderiv::to_string(harmonic_terms)}}}});
    } else if (format == Format::csv) {
        std::cout << "i,partition,harmonic,match\n";
        for (const auto& [i, value] : partition.a) {
            std::cout << i << ',' << nthderiv::to_string(value) << ','
                      << nthderiv::to_string(harmonic.a.at(i)) << ','
                      << (match ? "true" : "false") << "\n";
        }
    } else {
        std::cout << "log-reciprocal coefficients, order " << n << "\n";
        for (const auto& [i, value] : partition.a) {
            std::cout << "a[" << i << "]: partition=" << nthderiv::to_string(value)
                      << " harmonic=" << nthderiv::to_string(harmonic.a.at(i)) << "\n";
        }
        std::cout << "match: " << (match ? "true" : "false") << "\n";
        std::cout << "terms: partition path " << partition_terms << ", harmonic path "
                  << nthderiv::to_string(harmonic_terms) << "\n";
    }
    return match ? 0 : 1;
}

int run_verify(Format format) {
    const std::vector<nthderiv::CheckResult> checks = nthderiv::run_acceptance_checks();
    bool all_passed = true;
    for (const nthderiv::CheckResult& check : checks) {
        all_passed = all_passed && check.passed;
    }
    if (format == Format::json) {
        Json records = Json::array();
        for (const nthderiv::CheckResult& check : checks) {
            records.push_back(
                Json{{"id", check.id}, {"passed", check.passed}, {"detail", check.detail}});
        }
        emit_json(Json{{"checks", std::move(records)}, {"all_passed", all_passed}});
    } else if (format == Format::csv) {
        std::cout << "id,passed,detail\n";
        for (const nthderiv::CheckResult& check : checks) {
            std::cout << check.id << ',' << (check.passed ? "true" : "false") << ','
                      << csv_escape(check.detail) << "\n";
        }
    } else {
        for (const nthderiv::CheckResult& check : checks) {
            std::cout << (check.passed ? "PASS " : "FAIL ") << check.id << " (" << check.detail
                      << ")\n";
        }
        std::cout << (all_passed ? "all checks passed" : "CHECK FAILURES") << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact n-th derivatives of reciprocals, quotients and logarithms "
                 "via partition sums"};
    app.require_subcommand(1);

    std::string format_name = "pretty";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    int max_n = 10;
    int max_m = 5;
    app.add_option("--max-n", max_n, "upper sweep bound for n");
    app.add_option("--max-m", max_m, "upper sweep bound for m");

    auto* cmd_partitions =
        app.add_subcommand("partitions", "list the partitions of n with their weights");
    cmd_partitions->fallthrough();
    int partitions_n = 0;
    cmd_partitions->add_option("n", partitions_n, "integer to partition")->required();

    auto* cmd_reciprocal =
        app.add_subcommand("reciprocal", "jet of 1/v from the derivative values of v");
    cmd_reciprocal->fallthrough();
    std::string reciprocal_v;
    cmd_reciprocal
        ->add_option("--v", reciprocal_v, "derivative values of v, e.g. 2,1 or 1/2,-3/4")
        ->required();

    auto* cmd_quotient =
        app.add_subcommand("quotient", "jet of u/v from the derivative values of u and v");
    cmd_quotient->fallthrough();
    std::string quotient_u;
    std::string quotient_v;
    cmd_quotient->add_option("--u", quotient_u, "derivative values of u")->required();
    cmd_quotient->add_option("--v", quotient_v, "derivative values of v")->required();

    auto* cmd_identities =
        app.add_subcommand("identities", "sweep the partition identities and report each instance");
    cmd_identities->fallthrough();
    std::string identities_which;
    cmd_identities
        ->add_option("which", identities_which,
                     "exp|power|central|inverse-power|alternating|recurrence|composition|all")
        ->required();

    auto* cmd_logcoeffs = app.add_subcommand(
        "logcoeffs", "coefficients of the n-th derivative of 1/ln x, two independent ways");
    cmd_logcoeffs->fallthrough();
    int logcoeffs_n = 1;
    cmd_logcoeffs->add_option("n", logcoeffs_n, "derivative order")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the full self-check battery");
    cmd_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (*cmd_partitions) {
            return run_partitions(partitions_n, format);
        }
        if (*cmd_reciprocal) {
            return run_reciprocal(reciprocal_v, format);
        }
        if (*cmd_quotient) {
            return run_quotient(quotient_u, quotient_v, format);
        }
        if (*cmd_identities) {
            return run_identities(identities_which, max_n, max_m, format);
        }
        if (*cmd_logcoeffs) {
            return run_logcoeffs(logcoeffs_n, format);
        }
        if (*cmd_verify) {
            return run_verify(format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
