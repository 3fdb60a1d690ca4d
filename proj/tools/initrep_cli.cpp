// Command-line front end: partition bijection, strip decomposition,
// k-modular diagrams, class counts, and identity verification.
//
// Exit codes: 0 success / identity holds; 1 identity or predicate failure;
// 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "initrep/bijection.hpp"
#include "initrep/identities.hpp"
#include "initrep/modular.hpp"
#include "initrep/selftest.hpp"

using nlohmann::json;
using namespace initrep;

namespace {

json partition_json(const Partition& p) {
    return json{{"text", format_partition(p)}, {"parts", p.parts()}, {"weight", p.weight()}};
}

json mismatch_json(const std::optional<CoefficientMismatch>& m) {
    if (!m)
        return nullptr;
    return json{{"left_form", m->left_name},
                {"right_form", m->right_name},
                {"exponent", m->exponent},
                {"left", m->left.str()},
                {"right", m->right.str()}};
}

std::int64_t oracle_cap_from_env() {
    if (const char* value = std::getenv("INITREP_ORACLE_CAP")) {
        try {
            return std::stoll(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("INITREP_ORACLE_CAP is not an integer: " +
                                        std::string(value));
        }
    }
    return kDefaultOracleCap;
}

struct MapOptions {
    Part k = 1;
    std::string input;
    bool lax = false;
    bool with_trace = false;
    bool as_json = false;
};

int run_map(const MapOptions& opt, bool forward_direction) {
    Partition input = parse_partition(opt.input);
    const bool strict = !opt.lax;
    Partition image = forward_direction ? forward(input, opt.k, strict)
                                        : inverse(input, opt.k, strict);
    // The printable chain is the forward run: for unmap that is the chain of
    // the recovered preimage, whose endpoint is the command's input.
    BijectionTrace chain = trace(forward_direction ? input : image, opt.k);

    if (opt.as_json) {
        json doc{{"command", forward_direction ? "map" : "unmap"},
                 {"parameters", {{"k", opt.k}, {"strict", strict}}},
                 {"input", partition_json(input)},
                 {"result", {{"image", partition_json(image)}}}};
        if (opt.with_trace)
            doc["result"]["trace"] = {{"lambda_conj", partition_json(chain.lambda_conj)},
                                      {"pi", partition_json(chain.pi)},
                                      {"delta", partition_json(chain.delta)},
                                      {"alpha", partition_json(chain.alpha)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (opt.with_trace) {
        std::cout << "lambda_conj: " << format_partition(chain.lambda_conj) << "\n";
        std::cout << "pi: " << format_partition(chain.pi) << "\n";
        std::cout << "delta: " << format_partition(chain.delta) << "\n";
        std::cout << "alpha: " << format_partition(chain.alpha) << "\n";
    }
    std::cout << format_partition(image) << "\n";
    return 0;
}

int run_decompose(Part k, const std::string& input_text, bool as_json) {
    Partition input = parse_partition(input_text);
    StripDecomposition sd = decompose(input, k);
    if (as_json) {
        json doc{{"command", "decompose"},
                 {"parameters", {{"k", k}}},
                 {"input", partition_json(input)},
                 {"result", {{"pi", partition_json(sd.pi)}, {"delta", partition_json(sd.delta)}}}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "pi: " << format_partition(sd.pi) << "\n";
    std::cout << "delta: " << format_partition(sd.delta) << "\n";
    return 0;
}

int run_diagram(Part k, const std::string& input_text) {
    Partition input = parse_partition(input_text);
    std::string rendering = render_text(k_modular_diagram(input, k));
    if (!rendering.empty())
        std::cout << rendering << "\n";
    return 0;
}

int run_verify(int identity_id, Part k, std::optional<std::int64_t> m, std::int64_t limit,
               bool as_json) {
    IdentityReport report = verify_identity(identity_id, k, m, limit, oracle_cap_from_env());
    if (as_json) {
        json checks = json::array();
        for (const auto& c : report.oracle_checks)
            checks.push_back({{"form", c.form_name},
                              {"class", to_string(c.cls)},
                              {"agrees", c.agrees},
                              {"mismatch", mismatch_json(c.mismatch)}});
        json doc{{"command", "verify"},
                 {"parameters",
                  {{"identity", report.identity_id},
                   {"k", report.k},
                   {"m", report.m ? json(*report.m) : json(nullptr)},
                   {"limit", report.trunc}}},
                 {"result",
                  {{"holds", report.holds()},
                   {"forms", report.form_names},
                   {"series_equal", report.series_equal},
                   {"first_mismatch", mismatch_json(report.first_mismatch)},
                   {"oracle", {{"limit", report.oracle_limit}, {"checks", checks}}}}}};
        std::cout << doc.dump(2) << "\n";
        return report.holds() ? 0 : 1;
    }

    std::cout << "identity " << report.identity_id << ": k=" << report.k;
    if (report.m)
        std::cout << ", m=" << *report.m;
    std::cout << ", truncation " << report.trunc << "\n";
    std::cout << "  forms:";
    for (const auto& name : report.form_names)
        std::cout << " [" << name << "]";
    std::cout << "\n";
    if (report.series_equal) {
        std::cout << "  series agreement: all coefficients 0.." << report.trunc << " equal\n";
    } else {
        const auto& mm = *report.first_mismatch;
        std::cout << "  series mismatch at q^" << mm.exponent << ": [" << mm.left_name << "] has "
                  << mm.left.str() << ", [" << mm.right_name << "] has " << mm.right.str() << "\n";
    }
    for (const auto& c : report.oracle_checks) {
        if (c.agrees) {
            std::cout << "  enumeration cross-check (n <= " << report.oracle_limit << "): ["
                      << c.form_name << "] matches " << to_string(c.cls) << " counts\n";
        } else {
            const auto& mm = *c.mismatch;
            std::cout << "  enumeration mismatch at q^" << mm.exponent << ": [" << c.form_name
                      << "] has " << mm.left.str() << ", " << to_string(c.cls) << " count is "
                      << mm.right.str() << "\n";
        }
    }
    std::cout << (report.holds() ? "PASS" : "FAIL") << "\n";
    return report.holds() ? 0 : 1;
}

int run_count(std::int64_t n, Part k, const std::string& class_name,
              std::optional<std::int64_t> m) {
    auto cls = partition_class_from_string(class_name);
    if (!cls) {
        std::cerr << "error: unknown class '" << class_name << "'\n";
        return 2;
    }
    if (*cls == PartitionClass::InitialRepsCapped && !m) {
        std::cerr << "error: class initial-reps-capped requires --m\n";
        return 2;
    }
    if (*cls != PartitionClass::InitialRepsCapped && m) {
        std::cerr << "error: --m only applies to class initial-reps-capped\n";
        return 2;
    }
    std::cout << count_class(n, k, *cls, m.value_or(0)) << "\n";
    return 0;
}

int run_selftest_cmd(std::int64_t max_n, Part max_k) {
    SelftestReport report = run_selftest(max_n, max_k);
    for (const auto& c : report.checks) {
        if (c.passed)
            std::cout << "ok    " << c.name << " (" << c.cases << " cases)\n";
        else
            std::cout << "FAIL  " << c.name << ": " << c.counterexample << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks)
        passed += c.passed ? 1 : 0;
    std::cout << "selftest: " << passed << "/" << report.checks.size()
              << " checks passed (max_n=" << max_n << ", max_k=" << max_k << ")\n";
    return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitions with initial k-repetitions: bijection, strips, diagrams, identities"};
    app.require_subcommand(1);

    MapOptions map_opt;
    auto add_map_flags = [&](CLI::App* cmd) {
        cmd->add_option("--k", map_opt.k, "modulus k")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--input", map_opt.input,
                        "partition text, e.g. \"29,27,25,21,17,8,8,5,4,1\" or \"5^9,4^4\"")
            ->required();
        cmd->add_flag("--lax", map_opt.lax, "run the four steps without the domain check");
        cmd->add_flag("--trace", map_opt.with_trace,
                      "print the intermediate chain lambda_conj, pi, delta, alpha");
        cmd->add_flag("--json", map_opt.as_json, "emit a structured document");
    };
    CLI::App* cmd_map = app.add_subcommand("map", "apply the forward map");
    add_map_flags(cmd_map);
    CLI::App* cmd_unmap = app.add_subcommand("unmap", "apply the inverse map");
    add_map_flags(cmd_unmap);

    Part dec_k = 1;
    std::string dec_input;
    bool dec_json = false;
    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "split into a k-flat pi and strip record delta");
    cmd_decompose->add_option("--k", dec_k, "modulus k")->required()->check(CLI::PositiveNumber);
    cmd_decompose->add_option("--input", dec_input, "partition text")->required();
    cmd_decompose->add_flag("--json", dec_json, "emit a structured document");

    Part dia_k = 1;
    std::string dia_input;
    CLI::App* cmd_diagram = app.add_subcommand("diagram", "print the k-modular diagram");
    cmd_diagram->add_option("--k", dia_k, "modulus k")->required()->check(CLI::PositiveNumber);
    cmd_diagram->add_option("--input", dia_input, "partition text")->required();

    int ver_identity = 1;
    Part ver_k = 1;
    std::int64_t ver_m = 0;
    std::int64_t ver_limit = 40;
    bool ver_json = false;
    CLI::App* cmd_verify = app.add_subcommand("verify", "check an identity to a truncation order");
    cmd_verify->add_option("--identity", ver_identity, "identity id: 1, 2 or 3")
        ->required()
        ->check(CLI::Range(1, 3));
    cmd_verify->add_option("--k", ver_k, "modulus k")->required()->check(CLI::PositiveNumber);
    CLI::Option* ver_m_opt =
        cmd_verify->add_option("--m", ver_m, "sum cap for identity 2")->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--limit", ver_limit, "truncation order N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_flag("--json", ver_json, "emit a structured document");

    std::int64_t cnt_n = 0;
    Part cnt_k = 1;
    std::string cnt_class;
    std::int64_t cnt_m = 0;
    CLI::App* cmd_count = app.add_subcommand("count", "count partitions of n in a class");
    cmd_count->add_option("--n", cnt_n, "weight n")->required()->check(CLI::NonNegativeNumber);
    cmd_count->add_option("--k", cnt_k, "modulus k")->required()->check(CLI::PositiveNumber);
    cmd_count
        ->add_option("--class", cnt_class,
                     "repetition-bounded | initial-reps | initial-reps-capped | "
                     "strong-initial-reps | k-flat-conjugate")
        ->required();
    CLI::Option* cnt_m_opt = cmd_count->add_option("--m", cnt_m, "cap for initial-reps-capped")
                                 ->check(CLI::NonNegativeNumber);

    std::int64_t st_max_n = 20;
    Part st_max_k = 3;
    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "exhaustive roundtrip and oracle sweep");
    cmd_selftest->add_option("--max-n", st_max_n, "largest weight to sweep")
        ->check(CLI::NonNegativeNumber);
    cmd_selftest->add_option("--max-k", st_max_k, "largest modulus to sweep")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_map)
            return run_map(map_opt, true);
        if (*cmd_unmap)
            return run_map(map_opt, false);
        if (*cmd_decompose)
            return run_decompose(dec_k, dec_input, dec_json);
        if (*cmd_diagram)
            return run_diagram(dia_k, dia_input);
        if (*cmd_verify) {
            if (ver_identity == 2 && ver_m_opt->count() == 0) {
                std::cerr << "error: identity 2 requires --m\n";
                return 2;
            }
            if (ver_identity != 2 && ver_m_opt->count() > 0) {
                std::cerr << "error: --m only applies to identity 2\n";
                return 2;
            }
            std::optional<std::int64_t> m;
            if (ver_identity == 2)
                m = ver_m;
            return run_verify(ver_identity, ver_k, m, ver_limit, ver_json);
        }
        if (*cmd_count) {
            std::optional<std::int64_t> m;
            if (cnt_m_opt->count() > 0)
                m = cnt_m;
            return run_count(cnt_n, cnt_k, cnt_class, m);
        }
        if (*cmd_selftest)
            return run_selftest_cmd(st_max_n, st_max_k);
    } catch (const DomainViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        // parse errors, malformed partitions, cap violations
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
