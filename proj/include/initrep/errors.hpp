#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace initrep {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input sequence is not weakly decreasing, or contains a non-positive part.
// `index` is the 0-based position of the first violation.
class NotAPartition : public Error {
public:
    NotAPartition(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Partition text that does not match the accepted format.
// `position` is the byte offset of the offending character or token.
class PartitionParseError : public Error {
public:
    PartitionParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// remove_strip called where no strip of the requested length is removable.
// `gap` is the offending difference lambda_i - lambda_{i+1}, or -1 when the
// requested length is out of range.
class StripNotRemovable : public Error {
public:
    StripNotRemovable(const std::string& what, std::int64_t length, std::int64_t gap)
        : Error(what), length_(length), gap_(gap) {}
    std::int64_t length() const noexcept { return length_; }
    std::int64_t gap() const noexcept { return gap_; }

private:
    std::int64_t length_;
    std::int64_t gap_;
};

// insert_strips input whose pi is not k-flat or whose delta has a part that
// is not a positive multiple of k.
class MalformedDecomposition : public Error {
public:
    using Error::Error;
};

// Strict-mode bijection called outside its domain. `part_value` is the
// offending part; for the inverse direction `companion` is the smaller value
// with deficient multiplicity (0 otherwise).
class DomainViolation : public Error {
public:
    DomainViolation(const std::string& what, std::int64_t part_value, std::int64_t companion = 0)
        : Error(what), part_value_(part_value), companion_(companion) {}
    std::int64_t part_value() const noexcept { return part_value_; }
    std::int64_t companion() const noexcept { return companion_; }

private:
    std::int64_t part_value_;
    std::int64_t companion_;
};

// Binary series operation on operands with different truncation orders.
class TruncationMismatch : public Error {
public:
    TruncationMismatch(const std::string& what, std::int64_t left, std::int64_t right)
        : Error(what), left_(left), right_(right) {}
    std::int64_t left() const noexcept { return left_; }
    std::int64_t right() const noexcept { return right_; }

private:
    std::int64_t left_;
    std::int64_t right_;
};

// Enumeration request beyond the configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::int64_t requested, std::int64_t cap)
        : Error(what), requested_(requested), cap_(cap) {}
    std::int64_t requested() const noexcept { return requested_; }
    std::int64_t cap() const noexcept { return cap_; }

private:
    std::int64_t requested_;
    std::int64_t cap_;
};

// Integer arithmetic that would wrap. Part values and weights are machine
// integers; overflow is reported, never silently wrapped.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

} // namespace initrep
