#include "initrep/identities.hpp"

#include <algorithm>

namespace initrep {

void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& fn,
                        std::int64_t cap) {
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    if (n > cap)
        throw CapExceeded("enumeration of partitions of " + std::to_string(n) +
                              " exceeds the cap of " + std::to_string(cap),
                          n, cap);
    if (n == 0) {
        fn(Partition{});
        return;
    }
    std::vector<Part> parts{n};
    for (;;) {
        fn(Partition(parts));
        // Step to the next partition in lexicographically decreasing order:
        // strip trailing 1s, decrement the last part > 1, refill greedily.
        std::size_t idx = parts.size();
        Part spare = 0;
        while (idx > 0 && parts[idx - 1] == 1) {
            --idx;
            ++spare;
        }
        if (idx == 0)
            break;
        parts.resize(idx);
        --parts[idx - 1];
        ++spare;
        const Part chunk = parts[idx - 1];
        while (spare > chunk) {
            parts.push_back(chunk);
            spare -= chunk;
        }
        if (spare > 0)
            parts.push_back(spare);
    }
}

std::vector<Partition> enumerate_partitions(std::int64_t n, std::int64_t cap) {
    std::vector<Partition> out;
    for_each_partition(
        n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

std::string to_string(PartitionClass cls) {
    switch (cls) {
    case PartitionClass::RepetitionBounded: return "repetition-bounded";
    case PartitionClass::InitialReps: return "initial-reps";
    case PartitionClass::InitialRepsCapped: return "initial-reps-capped";
    case PartitionClass::StrongInitialReps: return "strong-initial-reps";
    case PartitionClass::KFlatConjugate: return "k-flat-conjugate";
    }
    return "unknown";
}

std::optional<PartitionClass> partition_class_from_string(std::string_view name) {
    if (name == "repetition-bounded") return PartitionClass::RepetitionBounded;
    if (name == "initial-reps") return PartitionClass::InitialReps;
    if (name == "initial-reps-capped") return PartitionClass::InitialRepsCapped;
    if (name == "strong-initial-reps") return PartitionClass::StrongInitialReps;
    if (name == "k-flat-conjugate") return PartitionClass::KFlatConjugate;
    return std::nullopt;
}

bool in_class(const Partition& p, Part k, PartitionClass cls, std::int64_t m) {
    switch (cls) {
    case PartitionClass::RepetitionBounded:
        return is_repetition_bounded(p, k);
    case PartitionClass::InitialReps:
        return has_initial_k_repetitions(p, k);
    case PartitionClass::InitialRepsCapped:
        return has_initial_k_repetitions(p, k) && largest_k_repeated_part(p, k) <= m;
    case PartitionClass::StrongInitialReps:
        return has_strong_initial_repetitions(p, k);
    case PartitionClass::KFlatConjugate:
        return is_k_flat(conjugate(p), k);
    }
    throw std::invalid_argument("unknown partition class");
}

std::int64_t count_class(std::int64_t n, Part k, PartitionClass cls, std::int64_t m,
                         std::int64_t cap) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    std::int64_t count = 0;
    for_each_partition(
        n,
        [&](const Partition& p) {
            if (in_class(p, k, cls, m))
                ++count;
        },
        cap);
    return count;
}

Series partition_generating_series(std::int64_t trunc) {
    return product_over(1, trunc, trunc,
                        [&](std::int64_t j) { return geometric_inverse_factor(j, trunc); });
}

namespace {

// Sum side shared by identities (1), (2) and (3):
//   sum_n q^{e(n)} * prod_{i=1..n} 1/(1-q^i) * prod_{j=n+1..N} (1+...+q^{(k-1)j})
// with e(n) = k n(n+1)/2 (triangular) or k n^2 (square). max_terms < 0 means
// every term with e(n) <= N.
Series bounded_tail_sum(Part k, std::int64_t trunc, std::int64_t max_terms, bool square_exponent) {
    // tail(n) = prod_{j=n+1..N} (1+q^j+...+q^{(k-1)j}), built from the top.
    std::vector<Series> tail(static_cast<std::size_t>(trunc) + 2, Series::one(trunc));
    for (std::int64_t j = trunc; j >= 1; --j)
        tail[static_cast<std::size_t>(j - 1)] =
            finite_geometric_factor(j, k - 1, trunc) * tail[static_cast<std::size_t>(j)];

    Series acc(trunc);
    Series prefix = Series::one(trunc); // prod_{i=1..n} 1/(1-q^i)
    for (std::int64_t n = 0;; ++n) {
        std::int64_t exponent = square_exponent ? k * n * n : k * n * (n + 1) / 2;
        if (exponent > trunc)
            break;
        if (max_terms >= 0 && n > max_terms)
            break;
        if (n > 0)
            prefix *= geometric_inverse_factor(n, trunc);
        std::size_t tail_index = static_cast<std::size_t>(std::min(n, trunc));
        acc += Series::monomial(1, exponent, trunc) * prefix * tail[tail_index];
    }
    return acc;
}

// prod_{j=1..N} (1+q^j+...+q^{(k-1)j}), the series form of
// prod (1-q^{jk})/(1-q^j).
Series k_flat_factor(Part k, std::int64_t trunc) {
    return product_over(1, trunc, trunc,
                        [&](std::int64_t j) { return finite_geometric_factor(j, k - 1, trunc); });
}

// sum_{n=0..max_terms} q^{e(n)} / ((1-q^k)(1-q^{2k})...(1-q^{nk}))
Series distinct_multiples_sum(Part k, std::int64_t trunc, std::int64_t max_terms,
                              bool square_exponent) {
    Series acc(trunc);
    Series prefix = Series::one(trunc);
    for (std::int64_t n = 0;; ++n) {
        std::int64_t exponent = square_exponent ? k * n * n : k * n * (n + 1) / 2;
        if (exponent > trunc)
            break;
        if (max_terms >= 0 && n > max_terms)
            break;
        if (n > 0)
            prefix *= geometric_inverse_factor(n * k, trunc);
        acc += Series::monomial(1, exponent, trunc) * prefix;
    }
    return acc;
}

} // namespace

std::pair<Series, Series> identity1_sides(Part k, std::int64_t trunc) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    Series lhs = bounded_tail_sum(k, trunc, -1, false);
    Series rhs = product_over(1, trunc, trunc, [&](std::int64_t j) {
        return finite_geometric_factor(j, 2 * k - 1, trunc);
    });
    return {std::move(lhs), std::move(rhs)};
}

std::pair<Series, Series> identity2_sides(Part k, std::int64_t m, std::int64_t trunc) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    if (m < 0)
        throw std::invalid_argument("m must be >= 0");
    Series lhs = bounded_tail_sum(k, trunc, m, false);
    Series rhs = k_flat_factor(k, trunc) * distinct_multiples_sum(k, trunc, m, false);
    return {std::move(lhs), std::move(rhs)};
}

Identity3Forms identity3_forms(Part k, std::int64_t trunc) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    Identity3Forms forms{Series(trunc), Series(trunc), Series(trunc), Series(trunc)};
    forms.sum_form = bounded_tail_sum(k, trunc, -1, true);
    forms.middle_form = k_flat_factor(k, trunc) * distinct_multiples_sum(k, trunc, -1, true);

    // First Rogers-Ramanujan product scaled by k: exponents k(5t+1), k(5t+4).
    Series rr = k_flat_factor(k, trunc);
    for (std::int64_t t = 0; k * (5 * t + 1) <= trunc; ++t)
        rr *= geometric_inverse_factor(k * (5 * t + 1), trunc);
    for (std::int64_t t = 0; k * (5 * t + 4) <= trunc; ++t)
        rr *= geometric_inverse_factor(k * (5 * t + 4), trunc);
    forms.rr_product_form = std::move(rr);

    // Merged product: numerator factors (1-q^{5jk}) j>=1, (1-q^{(5j+2)k}) and
    // (1-q^{(5j+3)k}) j>=0, over prod_{j=1..N} (1-q^j).
    Series merged = partition_generating_series(trunc);
    for (std::int64_t j = 1; 5 * j * k <= trunc; ++j)
        merged *= one_minus_power(5 * j * k, trunc);
    for (std::int64_t j = 0; (5 * j + 2) * k <= trunc; ++j)
        merged *= one_minus_power((5 * j + 2) * k, trunc);
    for (std::int64_t j = 0; (5 * j + 3) * k <= trunc; ++j)
        merged *= one_minus_power((5 * j + 3) * k, trunc);
    forms.final_product_form = std::move(merged);

    return forms;
}

bool IdentityReport::oracle_agrees() const {
    return std::all_of(oracle_checks.begin(), oracle_checks.end(),
                       [](const OracleCheck& c) { return c.agrees; });
}

namespace {

OracleCheck run_oracle_check(const Series& s, const std::string& form_name, Part k,
                             PartitionClass cls, std::int64_t m, std::int64_t limit,
                             std::int64_t enumeration_cap) {
    OracleCheck check;
    check.form_name = form_name;
    check.cls = cls;
    for (std::int64_t n = 0; n <= limit; ++n) {
        Coeff expected = count_class(n, k, cls, m, enumeration_cap);
        if (s.coeff(n) != expected) {
            check.agrees = false;
            check.mismatch = CoefficientMismatch{form_name, "count " + to_string(cls), n,
                                                 s.coeff(n), expected};
            break;
        }
    }
    return check;
}

} // namespace

IdentityReport verify_identity(int identity_id, Part k, std::optional<std::int64_t> m,
                               std::int64_t trunc, std::int64_t oracle_cap,
                               std::int64_t enumeration_cap) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    if (trunc < 0)
        throw std::invalid_argument("truncation order must be >= 0");
    if (identity_id == 2 && !m)
        throw std::invalid_argument("identity 2 requires the cap parameter m");
    if (identity_id != 2 && m)
        throw std::invalid_argument("only identity 2 takes the cap parameter m");

    IdentityReport report;
    report.identity_id = identity_id;
    report.k = k;
    report.m = m;
    report.trunc = trunc;

    std::vector<Series> forms;
    std::vector<PartitionClass> classes;
    std::int64_t class_m = 0;
    switch (identity_id) {
    case 1: {
        auto [lhs, rhs] = identity1_sides(k, trunc);
        forms = {std::move(lhs), std::move(rhs)};
        report.form_names = {"initial-repetitions sum side", "repetition-bounded product side"};
        classes = {PartitionClass::InitialReps, PartitionClass::RepetitionBounded};
        break;
    }
    case 2: {
        auto [lhs, rhs] = identity2_sides(k, *m, trunc);
        forms = {std::move(lhs), std::move(rhs)};
        report.form_names = {"capped initial-repetitions sum side",
                             "k-flat factor times distinct-multiples sum"};
        classes = {PartitionClass::InitialRepsCapped, PartitionClass::InitialRepsCapped};
        class_m = *m;
        break;
    }
    case 3: {
        Identity3Forms f = identity3_forms(k, trunc);
        forms.push_back(std::move(f.sum_form));
        forms.push_back(std::move(f.middle_form));
        forms.push_back(std::move(f.rr_product_form));
        forms.push_back(std::move(f.final_product_form));
        report.form_names = {"strong-initial-repetitions sum form",
                             "k-flat factor with squared-staircase sum",
                             "k-flat factor with Rogers-Ramanujan product",
                             "merged single product"};
        classes.assign(4, PartitionClass::StrongInitialReps);
        break;
    }
    default:
        throw std::invalid_argument("identity id must be 1, 2 or 3");
    }

    for (std::size_t i = 1; i < forms.size() && report.series_equal; ++i) {
        SeriesComparison cmp = equal_up_to(forms[0], forms[i]);
        if (!cmp.equal) {
            report.series_equal = false;
            report.first_mismatch = CoefficientMismatch{report.form_names[0], report.form_names[i],
                                                        cmp.exponent, cmp.left, cmp.right};
        }
    }

    report.oracle_limit = std::min({trunc, oracle_cap, enumeration_cap});
    for (std::size_t i = 0; i < forms.size(); ++i)
        report.oracle_checks.push_back(run_oracle_check(forms[i], report.form_names[i], k,
                                                        classes[i], class_m, report.oracle_limit,
                                                        enumeration_cap));
    return report;
}

} // namespace initrep
