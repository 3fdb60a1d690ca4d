#pragma once

#include <string>
#include <vector>

#include "initrep/partition.hpp"

namespace initrep {

/* The k-modular diagram of a partition: one column per part, in part order,
 * each part split as quotient*k + residue with 0 <= residue < k. The residue
 * is stored in 0..k-1; only the text renderer applies the display convention
 * of promoting a k-cell to the top row when the residue is 0. */
struct ModularColumn {
    Part quotient = 0;
    Part residue = 0;

    friend bool operator==(const ModularColumn&, const ModularColumn&) = default;
};

struct KModularDiagram {
    Part k = 1;
    std::vector<ModularColumn> columns;

    friend bool operator==(const KModularDiagram&, const KModularDiagram&) = default;
};

KModularDiagram k_modular_diagram(const Partition& p, Part k);

// Reconstructs the partition from quotient*k + residue per column.
Partition to_partition(const KModularDiagram& d);

/* Grid rendering: one column per part. The top cell shows the residue if
 * nonzero, otherwise the topmost k-cell; below it, one "k" cell per
 * remaining quotient unit. Cells are right-aligned to the widest cell of
 * their column and joined with a single space; trailing blanks are trimmed.
 * The empty diagram renders as the empty string. */
std::string render_text(const KModularDiagram& d);

} // namespace initrep
