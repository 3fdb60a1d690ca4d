#pragma once

#include <vector>

#include "initrep/partition.hpp"

namespace initrep {

/* A k-strip of length i is a removable row of k-cells across parts 1..i,
 * removable exactly when lambda_i - lambda_{i+1} >= k (lambda_{m+1} = 0).
 * Removing every strip splits a partition uniquely into a k-flat remainder
 * pi and a record delta of the removed amounts, one part k*i per strip of
 * length i, sorted weakly decreasing. */
struct StripDecomposition {
    Part k = 1;
    Partition pi;    // k-flat
    Partition delta; // parts are positive multiples of k

    friend bool operator==(const StripDecomposition&, const StripDecomposition&) = default;
};

struct RemovableStrip {
    Part length = 0; // strip length i
    Part count = 0;  // strips of this length removable in immediate succession

    friend bool operator==(const RemovableStrip&, const RemovableStrip&) = default;
};

// Reports floor((lambda_i - lambda_{i+1}) / k) for each position with a
// positive quotient, in increasing i.
std::vector<RemovableStrip> removable_strips(const Partition& p, Part k);

// Subtracts k from parts 1..length; parts reduced to 0 are dropped.
// Throws StripNotRemovable when the gap at `length` is below k.
Partition remove_strip(const Partition& p, Part k, Part length);

// Removes strips until k-flat, longest removable strip first. The resulting
// (pi, delta) does not depend on the removal order.
StripDecomposition decompose(const Partition& p, Part k);

// Adds each delta part k*i back as a strip across parts 1..i, longest
// first. Exact inverse of decompose. Throws MalformedDecomposition when pi
// is not k-flat or a delta part is not a multiple of k.
Partition insert_strips(const StripDecomposition& d);

// Componentwise sum, zero-padding the shorter input.
Partition vector_add(const Partition& pi, const Partition& delta);

} // namespace initrep
