#pragma once

#include "initrep/partition.hpp"
#include "initrep/strips.hpp"

namespace initrep {

/* The four-step map on a partition lambda:
 *   conjugate -> remove all k-strips -> vector-add pi + delta -> conjugate.
 * Restricted to partitions with every multiplicity <= 2k-1 it is a
 * weight-preserving bijection onto the partitions with initial
 * k-repetitions; the same steps run on any partition when strict checking
 * is off. */
struct BijectionTrace {
    Part k = 1;
    Partition lambda;
    Partition lambda_conj;
    Partition pi;
    Partition delta;
    Partition alpha;
    Partition alpha_conj;

    friend bool operator==(const BijectionTrace&, const BijectionTrace&) = default;
};

// Image alpha' of lambda. With strict = true, throws DomainViolation unless
// every multiplicity is <= 2k-1 (reports an offending part value).
Partition forward(const Partition& lambda, Part k, bool strict = true);

// Preimage of beta: conjugate, strip delta off via multiplicity quotients,
// insert the strips back, conjugate. With strict = true, throws
// DomainViolation unless beta has initial k-repetitions (reports the
// k-repeated part and the smaller value with deficient multiplicity).
Partition inverse(const Partition& beta, Part k, bool strict = true);

// The full forward chain with every intermediate partition.
BijectionTrace trace(const Partition& lambda, Part k);

} // namespace initrep
