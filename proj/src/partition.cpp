#include "initrep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace initrep {

namespace {

Part checked_add(Part a, Part b) {
    Part out;
    if (__builtin_add_overflow(a, b, &out))
        throw ArithmeticOverflow("integer overflow while summing parts");
    return out;
}

void require_positive_k(Part k) {
    if (k < 1)
        throw std::invalid_argument("modulus k must be >= 1");
}

// Run-length view of a partition's parts: (value, count) pairs in strictly
// decreasing value order.
std::vector<std::pair<Part, Part>> runs(const Partition& p) {
    std::vector<std::pair<Part, Part>> out;
    for (Part v : p.parts()) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

// Largest value with multiplicity >= threshold, or 0.
Part largest_repeated(const std::vector<std::pair<Part, Part>>& rs, Part threshold) {
    for (const auto& [value, count] : rs)
        if (count >= threshold)
            return value;
    return 0;
}

// True iff every value in 1..below-1 has multiplicity >= threshold.
bool all_below_repeated(const std::vector<std::pair<Part, Part>>& rs, Part below, Part threshold) {
    auto it = rs.begin();
    while (it != rs.end() && it->first >= below)
        ++it;
    for (Part expected = below - 1; expected >= 1; --expected, ++it) {
        if (it == rs.end() || it->first != expected || it->second < threshold)
            return false;
    }
    return true;
}

} // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw NotAPartition("part at index " + std::to_string(i) + " is not positive", i);
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw NotAPartition("parts increase at index " + std::to_string(i), i);
    }
    for (Part v : parts_)
        weight_ = checked_add(weight_, v);
}

Partition make_partition(std::vector<Part> parts) {
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return Partition{};
    const auto& parts = p.parts();
    std::vector<Part> conj;
    conj.reserve(static_cast<std::size_t>(parts.front()));
    // #parts >= i is the length of the prefix still >= i; drop tail parts as
    // i grows.
    std::size_t alive = parts.size();
    for (Part i = 1; i <= parts.front(); ++i) {
        while (alive > 0 && parts[alive - 1] < i)
            --alive;
        conj.push_back(static_cast<Part>(alive));
    }
    return Partition(std::move(conj));
}

Part multiplicity(const Partition& p, Part value) {
    if (value < 1)
        throw std::invalid_argument("part value must be >= 1");
    const auto& parts = p.parts();
    auto [lo, hi] = std::equal_range(parts.begin(), parts.end(), value, std::greater<Part>{});
    return static_cast<Part>(hi - lo);
}

bool is_repetition_bounded(const Partition& p, Part k) {
    require_positive_k(k);
    for (const auto& [value, count] : runs(p))
        if (count > 2 * k - 1)
            return false;
    return true;
}

bool has_initial_k_repetitions(const Partition& p, Part k) {
    require_positive_k(k);
    auto rs = runs(p);
    Part top = largest_repeated(rs, k);
    if (top <= 1)
        return true;
    return all_below_repeated(rs, top, k);
}

bool has_strong_initial_repetitions(const Partition& p, Part k) {
    require_positive_k(k);
    auto rs = runs(p);
    Part top = largest_repeated(rs, k);
    if (top <= 1)
        return true;
    return all_below_repeated(rs, top, 2 * k);
}

bool is_k_flat(const Partition& p, Part k) {
    require_positive_k(k);
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Part next = (i + 1 < parts.size()) ? parts[i + 1] : 0;
        if (parts[i] - next >= k)
            return false;
    }
    return true;
}

Part largest_k_repeated_part(const Partition& p, Part k) {
    require_positive_k(k);
    return largest_repeated(runs(p), k);
}

namespace {

// Parses one nonnegative integer starting at pos; advances pos.
Part parse_number(std::string_view text, std::size_t& pos) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    Part value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw PartitionParseError("number out of range", pos);
    if (ec != std::errc() || ptr == first)
        throw PartitionParseError("expected a number", pos);
    pos += static_cast<std::size_t>(ptr - first);
    return value;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
}

} // namespace

Partition parse_partition(std::string_view text) {
    // Guards against "1^1000000000"-style expansion requests.
    constexpr Part max_expanded_parts = 1'000'000;

    std::vector<Part> parts;
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos == text.size())
        return Partition{};

    for (;;) {
        skip_spaces(text, pos);
        std::size_t token_start = pos;
        // from_chars accepts a sign; make_partition reports non-positive
        // values with the index of the expanded position.
        Part value = parse_number(text, pos);
        Part count = 1;
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_spaces(text, pos);
            std::size_t exp_start = pos;
            count = parse_number(text, pos);
            if (count < 1)
                throw PartitionParseError("exponent must be >= 1", exp_start);
            skip_spaces(text, pos);
        }
        if (static_cast<Part>(parts.size()) + count > max_expanded_parts)
            throw PartitionParseError("too many parts", token_start);
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw PartitionParseError("expected ',' between parts", pos);
        ++pos;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p, bool compress_runs) {
    std::string out;
    auto rs = runs(p);
    for (const auto& [value, count] : rs) {
        if (compress_runs && count >= 3) {
            if (!out.empty())
                out += ',';
            out += std::to_string(value) + "^" + std::to_string(count);
        } else {
            for (Part i = 0; i < count; ++i) {
                if (!out.empty())
                    out += ',';
                out += std::to_string(value);
            }
        }
    }
    return out;
}

} // namespace initrep
