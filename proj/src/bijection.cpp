#include "initrep/bijection.hpp"

#include <string>

namespace initrep {

namespace {

void require_positive_k(Part k) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
}

void check_repetition_bounded(const Partition& p, Part k) {
    Part value = largest_k_repeated_part(p, 2 * k);
    if (value != 0)
        throw DomainViolation("part " + std::to_string(value) + " is repeated " +
                                  std::to_string(multiplicity(p, value)) + " times; at most " +
                                  std::to_string(2 * k - 1) + " repetitions are allowed",
                              value);
}

void check_initial_repetitions(const Partition& p, Part k) {
    if (has_initial_k_repetitions(p, k))
        return;
    Part top = largest_k_repeated_part(p, k);
    // Smallest value below `top` that breaks the initial-repetitions chain.
    Part deficient = 0;
    for (Part v = 1; v < top; ++v) {
        if (multiplicity(p, v) < k) {
            deficient = v;
            break;
        }
    }
    throw DomainViolation("part " + std::to_string(top) + " is repeated at least " +
                              std::to_string(k) + " times but the smaller part " +
                              std::to_string(deficient) + " is repeated only " +
                              std::to_string(multiplicity(p, deficient)) + " times",
                          top, deficient);
}

} // namespace

BijectionTrace trace(const Partition& lambda, Part k) {
    require_positive_k(k);
    BijectionTrace t;
    t.k = k;
    t.lambda = lambda;
    t.lambda_conj = conjugate(lambda);
    StripDecomposition sd = decompose(t.lambda_conj, k);
    t.pi = std::move(sd.pi);
    t.delta = std::move(sd.delta);
    t.alpha = vector_add(t.pi, t.delta);
    t.alpha_conj = conjugate(t.alpha);
    return t;
}

Partition forward(const Partition& lambda, Part k, bool strict) {
    require_positive_k(k);
    if (strict)
        check_repetition_bounded(lambda, k);
    return trace(lambda, k).alpha_conj;
}

Partition inverse(const Partition& beta, Part k, bool strict) {
    require_positive_k(k);
    if (strict)
        check_initial_repetitions(beta, k);

    // alpha = beta'; delta_i = k * sum_{t >= i} floor(mult_t(beta) / k),
    // pi = alpha - delta componentwise. pi comes out k-flat and delta a
    // partition into multiples of k for every input.
    Partition alpha = conjugate(beta);
    const auto& alpha_parts = alpha.parts();
    const std::size_t m = alpha_parts.size(); // = largest part of beta

    std::vector<Part> quotient(m + 1, 0);
    {
        Part value = 0, count = 0;
        for (Part v : beta.parts()) {
            if (v == value) {
                ++count;
            } else {
                if (value >= 1)
                    quotient[static_cast<std::size_t>(value)] = count / k;
                value = v;
                count = 1;
            }
        }
        if (value >= 1)
            quotient[static_cast<std::size_t>(value)] = count / k;
    }

    std::vector<Part> delta_parts(m, 0);
    std::vector<Part> pi_parts(m, 0);
    Part suffix = 0;
    for (std::size_t i = m; i >= 1; --i) {
        suffix += quotient[i];
        delta_parts[i - 1] = k * suffix;
        pi_parts[i - 1] = alpha_parts[i - 1] - delta_parts[i - 1];
    }
    while (!delta_parts.empty() && delta_parts.back() == 0)
        delta_parts.pop_back();
    while (!pi_parts.empty() && pi_parts.back() == 0)
        pi_parts.pop_back();

    StripDecomposition sd{k, Partition(std::move(pi_parts)), Partition(std::move(delta_parts))};
    return conjugate(insert_strips(sd));
}

} // namespace initrep
