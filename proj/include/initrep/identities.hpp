#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "initrep/partition.hpp"
#include "initrep/series.hpp"

namespace initrep {

inline constexpr std::int64_t kDefaultEnumerationCap = 60;
inline constexpr std::int64_t kDefaultOracleCap = 30;

// Visits every partition of n exactly once, in lexicographically decreasing
// order of the parts sequence. Throws CapExceeded when n > cap.
void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& fn,
                        std::int64_t cap = kDefaultEnumerationCap);

std::vector<Partition> enumerate_partitions(std::int64_t n,
                                            std::int64_t cap = kDefaultEnumerationCap);

enum class PartitionClass {
    RepetitionBounded,  // every multiplicity <= 2k-1
    InitialReps,        // initial k-repetitions
    InitialRepsCapped,  // initial k-repetitions and no part > m repeated >= k times
    StrongInitialReps,  // k-repetition forces 2k-repetitions below
    KFlatConjugate,     // conjugate is k-flat (every multiplicity < k)
};

// CLI-facing names: "repetition-bounded", "initial-reps", ...
std::string to_string(PartitionClass cls);
std::optional<PartitionClass> partition_class_from_string(std::string_view name);

bool in_class(const Partition& p, Part k, PartitionClass cls, std::int64_t m = 0);

std::int64_t count_class(std::int64_t n, Part k, PartitionClass cls, std::int64_t m = 0,
                         std::int64_t cap = kDefaultEnumerationCap);

// prod_{j>=1} 1/(1-q^j): coefficient of q^n counts all partitions of n.
Series partition_generating_series(std::int64_t trunc);

/* The three identities.
 *
 * (1)  sum_{n>=0} q^{k n(n+1)/2} / ((1-q)...(1-q^n))
 *          * prod_{j>n} (1+q^j+...+q^{(k-1)j})
 *      = prod_{j>=1} (1+q^j+...+q^{(2k-1)j})
 *
 * (2)  the same sum truncated at n = m
 *      = prod_{j>=1} (1-q^{jk})/(1-q^j)
 *          * sum_{n=0..m} q^{k n(n+1)/2} / ((1-q^k)...(1-q^{nk}))
 *
 * (3)  the variant with numerator q^{k n^2}, equal to the same k-flat-factor
 *      product times the squared-staircase sum, times the first
 *      Rogers-Ramanujan product scaled by k, and to a single merged product.
 */
std::pair<Series, Series> identity1_sides(Part k, std::int64_t trunc);
std::pair<Series, Series> identity2_sides(Part k, std::int64_t m, std::int64_t trunc);

struct Identity3Forms {
    Series sum_form;           // q^{k n^2} staircase sum with bounded tail product
    Series middle_form;        // k-flat factor times sum q^{k n^2} / ((1-q^k)...(1-q^{nk}))
    Series rr_product_form;    // k-flat factor times prod 1/((1-q^{k(5t+1)})(1-q^{k(5t+4)}))
    Series final_product_form; // merged single product
};
Identity3Forms identity3_forms(Part k, std::int64_t trunc);

struct CoefficientMismatch {
    std::string left_name;
    std::string right_name;
    std::int64_t exponent = -1;
    Coeff left;
    Coeff right;
};

struct OracleCheck {
    std::string form_name;
    PartitionClass cls = PartitionClass::InitialReps;
    bool agrees = true;
    std::optional<CoefficientMismatch> mismatch;
};

struct IdentityReport {
    int identity_id = 0;
    Part k = 1;
    std::optional<std::int64_t> m;
    std::int64_t trunc = 0;
    std::vector<std::string> form_names;
    bool series_equal = true;
    std::optional<CoefficientMismatch> first_mismatch;
    std::int64_t oracle_limit = -1; // highest n cross-checked by enumeration
    std::vector<OracleCheck> oracle_checks;

    bool oracle_agrees() const;
    bool holds() const { return series_equal && oracle_agrees(); }
};

// Builds every form of the identity, compares them coefficientwise, and
// cross-checks each against brute-force class counts for n up to
// min(trunc, oracle_cap). `m` is required for identity 2 and rejected
// otherwise.
IdentityReport verify_identity(int identity_id, Part k, std::optional<std::int64_t> m,
                               std::int64_t trunc, std::int64_t oracle_cap = kDefaultOracleCap,
                               std::int64_t enumeration_cap = kDefaultEnumerationCap);

} // namespace initrep
