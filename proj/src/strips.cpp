#include "initrep/strips.hpp"

#include <algorithm>
#include <string>

namespace initrep {

namespace {

void require_positive_k(Part k) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
}

// Largest strip length removable from `parts`, or 0 when none (k-flat).
Part longest_removable(const std::vector<Part>& parts, Part k) {
    for (std::size_t i = parts.size(); i >= 1; --i) {
        Part next = (i < parts.size()) ? parts[i] : 0;
        if (parts[i - 1] - next >= k)
            return static_cast<Part>(i);
    }
    return 0;
}

} // namespace

std::vector<RemovableStrip> removable_strips(const Partition& p, Part k) {
    require_positive_k(k);
    const auto& parts = p.parts();
    std::vector<RemovableStrip> out;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
        Part next = (i < parts.size()) ? parts[i] : 0;
        Part count = (parts[i - 1] - next) / k;
        if (count > 0)
            out.push_back({static_cast<Part>(i), count});
    }
    return out;
}

Partition remove_strip(const Partition& p, Part k, Part length) {
    require_positive_k(k);
    if (length < 1 || static_cast<std::size_t>(length) > p.size())
        throw StripNotRemovable(
            "strip length " + std::to_string(length) + " is out of range for a partition with " +
                std::to_string(p.size()) + " parts",
            length, -1);
    Part gap = p.part_or_zero(static_cast<std::size_t>(length)) -
               p.part_or_zero(static_cast<std::size_t>(length) + 1);
    if (gap < k)
        throw StripNotRemovable(
            "no removable strip of length " + std::to_string(length) + ": gap is " +
                std::to_string(gap) + " < " + std::to_string(k),
            length, gap);
    std::vector<Part> parts = p.parts();
    for (Part i = 0; i < length; ++i)
        parts[static_cast<std::size_t>(i)] -= k;
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

StripDecomposition decompose(const Partition& p, Part k) {
    require_positive_k(k);
    Partition pi = p;
    std::vector<Part> delta;
    for (;;) {
        Part len = longest_removable(pi.parts(), k);
        if (len == 0)
            break;
        pi = remove_strip(pi, k, len);
        delta.push_back(k * len);
    }
    // Longest-first removal yields delta already weakly decreasing.
    return StripDecomposition{k, std::move(pi), Partition(std::move(delta))};
}

Partition insert_strips(const StripDecomposition& d) {
    require_positive_k(d.k);
    if (!is_k_flat(d.pi, d.k))
        throw MalformedDecomposition("pi is not k-flat for k = " + std::to_string(d.k));
    for (Part v : d.delta.parts())
        if (v % d.k != 0)
            throw MalformedDecomposition("delta part " + std::to_string(v) +
                                         " is not a multiple of " + std::to_string(d.k));
    std::vector<Part> parts = d.pi.parts();
    for (Part v : d.delta.parts()) {
        std::size_t len = static_cast<std::size_t>(v / d.k);
        if (parts.size() < len)
            parts.resize(len, 0);
        for (std::size_t i = 0; i < len; ++i)
            parts[i] += d.k;
    }
    return Partition(std::move(parts));
}

Partition vector_add(const Partition& pi, const Partition& delta) {
    const auto& a = pi.parts();
    const auto& b = delta.parts();
    std::vector<Part> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Part x = i < a.size() ? a[i] : 0;
        Part y = i < b.size() ? b[i] : 0;
        if (__builtin_add_overflow(x, y, &out[i]))
            throw ArithmeticOverflow("integer overflow in vector addition");
    }
    return Partition(std::move(out));
}

} // namespace initrep
