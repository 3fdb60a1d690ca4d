#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "initrep/identities.hpp"
#include "initrep/partition.hpp"

namespace initrep {

struct SelftestCheck {
    std::string name;
    std::int64_t cases = 0;
    bool passed = true;
    std::string counterexample; // "n=..., k=..., partition=..." when !passed
};

struct SelftestReport {
    bool passed = true;
    std::vector<SelftestCheck> checks;
};

/* Exhaustive consistency sweep over all partitions of n <= max_n and
 * moduli k <= max_k:
 *   - forward/inverse roundtrips on the strict classes and on everything,
 *   - class equinumerosity and exact image coverage,
 *   - strip-removal order invariance under a seeded random order,
 *   - insert_strips after decompose returning the input,
 *   - series coefficients of prod 1/(1-q^j) against enumeration counts.
 * Deterministic; stops collecting counterexamples after the first per
 * check. */
SelftestReport run_selftest(std::int64_t max_n, Part max_k,
                            std::int64_t cap = kDefaultEnumerationCap);

} // namespace initrep
