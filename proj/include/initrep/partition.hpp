#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "initrep/errors.hpp"

namespace initrep {

using Part = std::int64_t;

/* An integer partition: a weakly decreasing sequence of positive parts.
 * Immutable after construction; the weight (sum of parts) is computed once
 * with overflow checking. The empty partition is a first-class value. */
class Partition {
public:
    Partition() = default;

    // Validates: every part positive, sequence weakly decreasing.
    // Throws NotAPartition with the index of the first violation.
    explicit Partition(std::vector<Part> parts);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    Part weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    // 1-indexed access with the lambda_{m+1} = 0 convention: any index past
    // the last part reads as 0.
    Part part_or_zero(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    Part weight_ = 0;
};

Partition make_partition(std::vector<Part> parts);

// Transpose of the Ferrers diagram: part i of the result counts parts of p
// that are >= i. An involution; preserves weight.
Partition conjugate(const Partition& p);

// Number of parts equal to value (value >= 1).
Part multiplicity(const Partition& p, Part value);

// Every part repeated at most 2k-1 times.
bool is_repetition_bounded(const Partition& p, Part k);

// If any part j appears at least k times, every value 1..j-1 appears at
// least k times.
bool has_initial_k_repetitions(const Partition& p, Part k);

// If any part j appears at least k times, every value 1..j-1 appears at
// least 2k times.
bool has_strong_initial_repetitions(const Partition& p, Part k);

// All adjacent gaps are < k, counting the smallest part against 0. A k-flat
// partition admits no removable k-strip; its conjugate has all
// multiplicities < k.
bool is_k_flat(const Partition& p, Part k);

// Largest part value with multiplicity >= k, or 0 if there is none.
Part largest_k_repeated_part(const Partition& p, Part k);

/* Text format: comma-separated decreasing parts ("29,27,25,21,17,8,8,5,4,1").
 * Exponent shorthand "a^m" is accepted on input ("5^9,4^4" reads as nine 5s
 * then four 4s). The empty string is the empty partition. Canonical output
 * compresses runs of 3 or more. */
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p, bool compress_runs = true);

} // namespace initrep
