#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "initrep/errors.hpp"

namespace initrep {

using Coeff = boost::multiprecision::cpp_int;

/* Truncated formal power series in q with exact integer coefficients.
 * A series of truncation order N stores c_0..c_N; every operation discards
 * exponents above N. Binary operations require equal truncation orders. */
class Series {
public:
    // The zero series truncated at N.
    explicit Series(std::int64_t trunc);

    static Series one(std::int64_t trunc);
    // a * q^e; the zero series when e > trunc.
    static Series monomial(Coeff a, std::int64_t exponent, std::int64_t trunc);

    std::int64_t trunc() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    const Coeff& coeff(std::int64_t n) const;
    void set_coeff(std::int64_t n, Coeff value);

    // Drops coefficients above new_trunc (new_trunc <= trunc()).
    Series truncated(std::int64_t new_trunc) const;

    Series& operator+=(const Series& other);
    Series& operator*=(const Series& other);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator*(const Series& a, const Series& b);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Coeff> coeffs_; // size trunc + 1
};

// 1 / (1 - q^d): coefficient 1 at every multiple of d.
Series geometric_inverse_factor(std::int64_t d, std::int64_t trunc);

// 1 + q^j + q^{2j} + ... + q^{c*j}; c = 0 gives the constant 1.
Series finite_geometric_factor(std::int64_t j, std::int64_t c, std::int64_t trunc);

// 1 - q^e.
Series one_minus_power(std::int64_t e, std::int64_t trunc);

// Product of factor(j) for j = from..to. Factors whose lowest non-constant
// exponent exceeds the truncation order contribute nothing, so products
// over unbounded ranges are taken with to = trunc.
template <typename FactorFn>
Series product_over(std::int64_t from, std::int64_t to, std::int64_t trunc, FactorFn&& factor) {
    Series acc = Series::one(trunc);
    for (std::int64_t j = from; j <= to; ++j)
        acc *= factor(j);
    return acc;
}

struct SeriesComparison {
    bool equal = true;
    std::int64_t exponent = -1; // first mismatching exponent when !equal
    Coeff left;
    Coeff right;
};

// Coefficientwise comparison; reports the first mismatch.
SeriesComparison equal_up_to(const Series& a, const Series& b);

// One "n<TAB>coefficient" line per exponent.
std::string coefficient_table(const Series& s);

} // namespace initrep
