// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. An optional argument selects a single criterion by number.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "initrep/bijection.hpp"
#include "initrep/identities.hpp"
#include "initrep/modular.hpp"

#include "generators.hpp"

#ifndef INITREP_CLI_PATH
#error "INITREP_CLI_PATH must point at the cli binary"
#endif

using namespace initrep;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(INITREP_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool expect(bool condition, const std::string& message, std::string& detail) {
    if (!condition && detail.empty())
        detail = message;
    return condition;
}

// 1. decompose --k 5 on (29,27,25,21,17,8,8,5,4,1) gives the worked pi and
//    delta; the rendered 5-modular diagram matches the reference matrix.
bool criterion1(std::string& detail) {
    bool ok = true;
    RunResult dec = run_cli("decompose --k 5 --input '29,27,25,21,17,8,8,5,4,1'");
    ok &= expect(dec.exit_code == 0, "decompose exited " + std::to_string(dec.exit_code), detail);
    ok &= expect(dec.output == "pi: 24,22,20,16,12,8,8,5,4,1\ndelta: 25\n",
                 "decompose output was: " + dec.output, detail);

    StripDecomposition sd = decompose(parse_partition("29,27,25,21,17,8,8,5,4,1"), 5);
    ok &= expect(sd.pi == make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}), "pi mismatch",
                 detail);
    ok &= expect(sd.delta == make_partition({25}), "delta mismatch", detail);

    const std::string matrix = "4 2 5 1 2 3 3 5 4 1\n"
                               "5 5 5 5 5 5 5\n"
                               "5 5 5 5 5\n"
                               "5 5 5 5 5\n"
                               "5 5 5 5\n"
                               "5 5";
    ok &= expect(render_text(k_modular_diagram(parse_partition("29,27,25,21,17,8,8,5,4,1"), 5)) ==
                     matrix,
                 "library diagram mismatch", detail);
    RunResult dia = run_cli("diagram --k 5 --input '29,27,25,21,17,8,8,5,4,1'");
    ok &= expect(dia.output == matrix + "\n", "cli diagram mismatch: " + dia.output, detail);
    return ok;
}

// 2. The forward map at k=5 on the 29-part partition gives the worked alpha
//    and alpha' (five fewer 5s, twenty-five more 1s).
bool criterion2(std::string& detail) {
    bool ok = true;
    Partition lambda = parse_partition("10,9^3,8,7^3,5^9,4^4,3^4,2,2,1,1");
    BijectionTrace t = trace(lambda, 5);
    ok &= expect(t.alpha == make_partition({49, 22, 20, 16, 12, 8, 8, 5, 4, 1}),
                 "alpha mismatch: " + format_partition(t.alpha), detail);
    Partition expected = parse_partition("10,9^3,8,7^3,5^4,4^4,3^4,2,2,1^27");
    ok &= expect(t.alpha_conj == expected, "alpha' mismatch: " + format_partition(t.alpha_conj),
                 detail);
    ok &= expect(multiplicity(t.alpha_conj, 5) == multiplicity(lambda, 5) - 5,
                 "expected five fewer parts of size 5", detail);
    ok &= expect(multiplicity(t.alpha_conj, 1) == multiplicity(lambda, 1) + 25,
                 "expected twenty-five more parts of size 1", detail);
    ok &= expect(forward(lambda, 5) == expected, "forward() disagrees with trace()", detail);

    RunResult r = run_cli("map --k 5 --input '10,9,9,9,8,7,7,7,5^9,4^4,3^4,2,2,1,1'");
    ok &= expect(r.exit_code == 0 && r.output == "10,9^3,8,7^3,5^4,4^4,3^4,2,2,1^27\n",
                 "cli map output was: " + r.output, detail);
    return ok;
}

// 3. Exhaustive bijectivity for n <= 28, k in 1..4.
bool criterion3(std::string& detail) {
    bool ok = true;
    for (std::int64_t n = 0; n <= 28 && ok; ++n) {
        std::vector<Partition> all = enumerate_partitions(n);
        for (Part k = 1; k <= 4 && ok; ++k) {
            std::set<Partition> images;
            std::int64_t bounded = 0;
            std::int64_t initial = 0;
            for (const Partition& p : all) {
                if (has_initial_k_repetitions(p, k))
                    ++initial;
                if (!is_repetition_bounded(p, k))
                    continue;
                ++bounded;
                Partition image = forward(p, k);
                ok &= expect(has_initial_k_repetitions(image, k),
                             "image outside the class: n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " p=" + format_partition(p),
                             detail);
                ok &= expect(inverse(image, k) == p,
                             "roundtrip failure: n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " p=" + format_partition(p),
                             detail);
                images.insert(image);
            }
            ok &= expect(static_cast<std::int64_t>(images.size()) == bounded,
                         "forward not injective at n=" + std::to_string(n) +
                             " k=" + std::to_string(k),
                         detail);
            ok &= expect(bounded == initial,
                         "class cardinalities differ at n=" + std::to_string(n) +
                             " k=" + std::to_string(k),
                         detail);
        }
    }
    return ok;
}

// 4. Identity (1) to q^60 for k = 1..5; both sides match enumeration counts
//    to q^28.
bool criterion4(std::string& detail) {
    bool ok = true;
    for (Part k = 1; k <= 5 && ok; ++k) {
        auto [lhs, rhs] = identity1_sides(k, 60);
        SeriesComparison cmp = equal_up_to(lhs, rhs);
        ok &= expect(cmp.equal,
                     "identity 1 mismatch at k=" + std::to_string(k) + " exponent " +
                         std::to_string(cmp.exponent),
                     detail);
        for (std::int64_t n = 0; n <= 28 && ok; ++n) {
            ok &= expect(lhs.coeff(n) == count_class(n, k, PartitionClass::InitialReps),
                         "identity 1 sum side disagrees with counts at n=" + std::to_string(n) +
                             " k=" + std::to_string(k),
                         detail);
            ok &= expect(rhs.coeff(n) == count_class(n, k, PartitionClass::RepetitionBounded),
                         "identity 1 product side disagrees with counts at n=" +
                             std::to_string(n) + " k=" + std::to_string(k),
                         detail);
        }
    }
    return ok;
}

// 5. Identity (2) to q^40 for k in {2,3}, m in 0..3; sum side matches the
//    capped class counts to q^26.
bool criterion5(std::string& detail) {
    bool ok = true;
    for (Part k = 2; k <= 3 && ok; ++k)
        for (std::int64_t m = 0; m <= 3 && ok; ++m) {
            auto [lhs, rhs] = identity2_sides(k, m, 40);
            SeriesComparison cmp = equal_up_to(lhs, rhs);
            ok &= expect(cmp.equal,
                         "identity 2 mismatch at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " exponent " +
                             std::to_string(cmp.exponent),
                         detail);
            for (std::int64_t n = 0; n <= 26 && ok; ++n)
                ok &= expect(lhs.coeff(n) ==
                                 count_class(n, k, PartitionClass::InitialRepsCapped, m),
                             "identity 2 sum side disagrees with counts at n=" +
                                 std::to_string(n) + " k=" + std::to_string(k) +
                                 " m=" + std::to_string(m),
                             detail);
        }
    return ok;
}

// 6. Identity (3): all four forms to q^40 for k = 1..3; the sum form counts
//    the strong class to q^26 at k = 2.
bool criterion6(std::string& detail) {
    bool ok = true;
    for (Part k = 1; k <= 3 && ok; ++k) {
        Identity3Forms f = identity3_forms(k, 40);
        const Series* forms[] = {&f.sum_form, &f.middle_form, &f.rr_product_form,
                                 &f.final_product_form};
        for (int i = 1; i < 4 && ok; ++i) {
            SeriesComparison cmp = equal_up_to(*forms[0], *forms[i]);
            ok &= expect(cmp.equal,
                         "identity 3 form " + std::to_string(i) + " mismatch at k=" +
                             std::to_string(k) + " exponent " + std::to_string(cmp.exponent),
                         detail);
        }
    }
    if (ok) {
        Identity3Forms f = identity3_forms(2, 26);
        for (std::int64_t n = 0; n <= 26 && ok; ++n)
            ok &= expect(f.sum_form.coeff(n) ==
                             count_class(n, 2, PartitionClass::StrongInitialReps),
                         "identity 3 sum form disagrees with strong counts at n=" +
                             std::to_string(n),
                         detail);
    }
    return ok;
}

// 7. Randomized structural properties, >= 10^4 cases each.
bool criterion7(std::string& detail) {
    bool ok = true;
    std::mt19937 rng(52004u);
    const int cases = 10000;
    std::uniform_int_distribution<Part> kdist(1, 5);

    for (int i = 0; i < cases && ok; ++i) {
        Partition p = testsupport::random_partition(rng);
        ok &= expect(conjugate(conjugate(p)) == p, "conjugation not an involution on " +
                                                       format_partition(p),
                     detail);
    }
    for (int i = 0; i < cases && ok; ++i) {
        Partition p = testsupport::random_partition(rng);
        Part k = kdist(rng);
        BijectionTrace t = trace(p, k);
        bool conserved = t.lambda_conj.weight() == p.weight() &&
                         t.pi.weight() + t.delta.weight() == p.weight() &&
                         t.alpha.weight() == p.weight() &&
                         t.alpha_conj.weight() == p.weight();
        ok &= expect(conserved, "weight not conserved through the chain on " +
                                    format_partition(p) + " k=" + std::to_string(k),
                     detail);
    }
    for (int i = 0; i < cases && ok; ++i) {
        Partition p = testsupport::random_partition(rng, 24, 18);
        Part k = kdist(rng);
        StripDecomposition canonical = decompose(p, k);
        Partition pi = p;
        std::vector<Part> delta;
        for (;;) {
            auto strips = removable_strips(pi, k);
            if (strips.empty())
                break;
            std::uniform_int_distribution<std::size_t> pick(0, strips.size() - 1);
            Part len = strips[pick(rng)].length;
            pi = remove_strip(pi, k, len);
            delta.push_back(k * len);
        }
        std::sort(delta.begin(), delta.end(), std::greater<Part>{});
        ok &= expect(pi == canonical.pi && Partition(delta) == canonical.delta,
                     "order-dependent decomposition on " + format_partition(p) +
                         " k=" + std::to_string(k),
                     detail);
    }
    for (int i = 0; i < cases && ok; ++i) {
        Partition p = testsupport::random_partition(rng);
        Part k = kdist(rng);
        ok &= expect(insert_strips(decompose(p, k)) == p,
                     "insert_strips(decompose) != id on " + format_partition(p) +
                         " k=" + std::to_string(k),
                     detail);
    }
    for (int i = 0; i < cases && ok; ++i) {
        Part k = kdist(rng);
        Partition lambda = testsupport::random_repetition_bounded(rng, k);
        BijectionTrace t = trace(lambda, k);
        const auto& d = t.delta.parts();
        bool distinct = true;
        for (std::size_t j = 0; j + 1 < d.size(); ++j)
            distinct &= d[j] > d[j + 1];
        ok &= expect(distinct, "delta parts not distinct on the bounded class: " +
                                   format_partition(lambda) + " k=" + std::to_string(k),
                     detail);
    }
    for (int i = 0; i < cases && ok; ++i) {
        Part k = kdist(rng);
        Partition beta = testsupport::random_strong_initial(rng, k);
        BijectionTrace t = trace(inverse(beta, k), k);
        bool gaps_ok = t.alpha_conj == beta;
        const auto& d = t.delta.parts();
        for (std::size_t j = 0; j + 1 < d.size(); ++j)
            gaps_ok &= d[j] - d[j + 1] >= 2 * k;
        ok &= expect(gaps_ok, "strong-class delta gap below 2k: " + format_partition(beta) +
                                  " k=" + std::to_string(k),
                     detail);
    }
    return ok;
}

// 8. Negative paths: the non-removable strip errors; the strict map reports
//    the offending part value.
bool criterion8(std::string& detail) {
    bool ok = true;
    try {
        remove_strip(make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1}), 5, 4);
        ok = expect(false, "remove_strip accepted a non-removable strip", detail);
    } catch (const StripNotRemovable& e) {
        ok &= expect(e.length() == 4 && e.gap() == 4,
                     "unexpected StripNotRemovable payload", detail);
    }
    try {
        forward(make_partition({2, 1, 1, 1, 1}), 2);
        ok = expect(false, "strict forward accepted an over-repeated part", detail);
    } catch (const DomainViolation& e) {
        ok &= expect(e.part_value() == 1, "DomainViolation did not name part 1", detail);
    }
    RunResult r = run_cli("map --k 2 --input '2,1,1,1,1'");
    ok &= expect(r.exit_code == 1 && r.output.find("part 1") != std::string::npos,
                 "cli did not report the violation: " + r.output, detail);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "worked 5-modular decomposition and diagram", criterion1},
        {2, "worked forward map at k=5", criterion2},
        {3, "exhaustive bijectivity, n <= 28, k <= 4", criterion3},
        {4, "identity 1 to q^60 (k <= 5) with counts to q^28", criterion4},
        {5, "identity 2 to q^40 (k in {2,3}, m <= 3) with counts to q^26", criterion5},
        {6, "identity 3, four forms to q^40 (k <= 3) with strong counts to q^26", criterion6},
        {7, "randomized structural properties, 10^4 cases each", criterion7},
        {8, "negative paths", criterion8},
    };

    int selected = 0;
    if (argc > 1)
        selected = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (selected != 0 && c.id != selected)
            continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name;
        if (!ok && !detail.empty())
            std::cout << " -- " << detail;
        std::cout << "\n";
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
