#include "initrep/modular.hpp"

#include <algorithm>

namespace initrep {

KModularDiagram k_modular_diagram(const Partition& p, Part k) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
    KModularDiagram d;
    d.k = k;
    d.columns.reserve(p.size());
    for (Part v : p.parts())
        d.columns.push_back({v / k, v % k});
    return d;
}

Partition to_partition(const KModularDiagram& d) {
    std::vector<Part> parts;
    parts.reserve(d.columns.size());
    for (const auto& c : d.columns)
        parts.push_back(c.quotient * d.k + c.residue);
    return Partition(std::move(parts));
}

std::string render_text(const KModularDiagram& d) {
    const std::size_t ncols = d.columns.size();
    if (ncols == 0)
        return "";

    // Cell stack per column, top first. Residue 0 shows the topmost k-cell
    // in the top row instead.
    std::vector<std::vector<std::string>> cells(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        const auto& col = d.columns[c];
        Part k_cells = col.quotient;
        if (col.residue != 0) {
            cells[c].push_back(std::to_string(col.residue));
        } else {
            cells[c].push_back(std::to_string(d.k)); // topmost k-cell promoted
            --k_cells;
        }
        for (Part i = 0; i < k_cells; ++i)
            cells[c].push_back(std::to_string(d.k));
    }

    std::vector<std::size_t> width(ncols, 0);
    std::size_t nrows = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        nrows = std::max(nrows, cells[c].size());
        for (const auto& s : cells[c])
            width[c] = std::max(width[c], s.size());
    }

    std::string out;
    for (std::size_t r = 0; r < nrows; ++r) {
        std::string line;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c > 0)
                line += ' ';
            std::string cell = r < cells[c].size() ? cells[c][r] : "";
            line += std::string(width[c] - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        if (r > 0)
            out += '\n';
        out += line;
    }
    return out;
}

} // namespace initrep
