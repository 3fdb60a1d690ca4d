#include "initrep/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "initrep/bijection.hpp"
#include "initrep/strips.hpp"

namespace initrep {

namespace {

std::string describe(std::int64_t n, Part k, const Partition& p, const std::string& detail) {
    return "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
           ", partition=" + format_partition(p) + (detail.empty() ? "" : " (" + detail + ")");
}

void record_failure(SelftestCheck& check, const std::string& counterexample) {
    if (check.passed) {
        check.passed = false;
        check.counterexample = counterexample;
    }
}

// Removes a uniformly chosen removable strip until none remains.
StripDecomposition decompose_random_order(const Partition& p, Part k, std::mt19937& rng) {
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
    return StripDecomposition{k, std::move(pi), Partition(std::move(delta))};
}

} // namespace

SelftestReport run_selftest(std::int64_t max_n, Part max_k, std::int64_t cap) {
    if (max_n < 0)
        throw std::invalid_argument("max_n must be >= 0");
    if (max_k < 1)
        throw std::invalid_argument("max_k must be >= 1");
    if (max_n > cap)
        throw CapExceeded("selftest bound " + std::to_string(max_n) + " exceeds the cap of " +
                              std::to_string(cap),
                          max_n, cap);

    SelftestReport report;
    auto named = [](std::string name) {
        SelftestCheck c;
        c.name = std::move(name);
        return c;
    };
    SelftestCheck roundtrip = named("roundtrip inverse(forward) on the repetition-bounded class");
    SelftestCheck roundtrip_back =
        named("roundtrip forward(inverse) on the initial-repetitions class");
    SelftestCheck roundtrip_total = named("roundtrip on all partitions with strict checks off");
    SelftestCheck image =
        named("forward maps the bounded class exactly onto the initial-repetitions class");
    SelftestCheck counts = named("class cardinalities agree");
    SelftestCheck order = named("strip removal order invariance");
    SelftestCheck reassembly = named("insert_strips undoes decompose");
    SelftestCheck oracle = named("series coefficients match enumeration counts");

    std::mt19937 rng(20240917u);

    for (std::int64_t n = 0; n <= max_n; ++n) {
        std::vector<Partition> all = enumerate_partitions(n, cap);
        for (Part k = 1; k <= max_k; ++k) {
            std::set<Partition> image_set;
            std::int64_t bounded_count = 0;
            std::int64_t initial_count = 0;
            for (const Partition& p : all) {
                if (is_repetition_bounded(p, k)) {
                    ++bounded_count;
                    Partition fwd = forward(p, k);
                    image_set.insert(fwd);
                    if (!has_initial_k_repetitions(fwd, k))
                        record_failure(image, describe(n, k, p, "image " + format_partition(fwd) +
                                                                     " lacks initial repetitions"));
                    ++image.cases;
                    if (inverse(fwd, k) != p)
                        record_failure(roundtrip, describe(n, k, p, ""));
                    ++roundtrip.cases;
                }
                if (has_initial_k_repetitions(p, k)) {
                    ++initial_count;
                    if (forward(inverse(p, k), k) != p)
                        record_failure(roundtrip_back, describe(n, k, p, ""));
                    ++roundtrip_back.cases;
                }
                Partition fwd_total = forward(p, k, /*strict=*/false);
                if (fwd_total.weight() != p.weight() ||
                    inverse(fwd_total, k, /*strict=*/false) != p)
                    record_failure(roundtrip_total, describe(n, k, p, ""));
                ++roundtrip_total.cases;

                StripDecomposition canonical = decompose(p, k);
                StripDecomposition random_order = decompose_random_order(p, k, rng);
                if (canonical.pi != random_order.pi || canonical.delta != random_order.delta)
                    record_failure(order, describe(n, k, p, ""));
                ++order.cases;
                if (insert_strips(canonical) != p)
                    record_failure(reassembly, describe(n, k, p, ""));
                ++reassembly.cases;
            }
            if (bounded_count != initial_count ||
                static_cast<std::int64_t>(image_set.size()) != initial_count)
                record_failure(counts,
                               "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                   " (bounded=" + std::to_string(bounded_count) +
                                   ", initial=" + std::to_string(initial_count) +
                                   ", image=" + std::to_string(image_set.size()) + ")");
            ++counts.cases;
        }
    }

    Series everything = partition_generating_series(max_n);
    for (std::int64_t n = 0; n <= max_n; ++n) {
        std::int64_t count = 0;
        for_each_partition(
            n, [&](const Partition&) { ++count; }, cap);
        Coeff expected = count;
        if (everything.coeff(n) != expected)
            record_failure(oracle, "n=" + std::to_string(n) + " (series " +
                                       everything.coeff(n).str() + ", enumeration " +
                                       expected.str() + ")");
        ++oracle.cases;
    }

    report.checks = {roundtrip, roundtrip_back, roundtrip_total, image,
                     counts,    order,          reassembly,      oracle};
    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const SelftestCheck& c) { return c.passed; });
    return report;
}

} // namespace initrep
