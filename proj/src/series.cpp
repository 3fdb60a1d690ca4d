#include "initrep/series.hpp"

#include <utility>

namespace initrep {

namespace {

void check_same_trunc(const Series& a, const Series& b) {
    if (a.trunc() != b.trunc())
        throw TruncationMismatch("series truncation orders differ: " + std::to_string(a.trunc()) +
                                     " vs " + std::to_string(b.trunc()),
                                 a.trunc(), b.trunc());
}

} // namespace

Series::Series(std::int64_t trunc) {
    if (trunc < 0)
        throw std::invalid_argument("truncation order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

Series Series::one(std::int64_t trunc) {
    Series s(trunc);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(Coeff a, std::int64_t exponent, std::int64_t trunc) {
    if (exponent < 0)
        throw std::invalid_argument("exponent must be >= 0");
    Series s(trunc);
    if (exponent <= trunc)
        s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(a);
    return s;
}

const Coeff& Series::coeff(std::int64_t n) const {
    if (n < 0 || n > trunc())
        throw std::out_of_range("exponent " + std::to_string(n) + " outside 0.." +
                                std::to_string(trunc()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(std::int64_t n, Coeff value) {
    if (n < 0 || n > trunc())
        throw std::out_of_range("exponent " + std::to_string(n) + " outside 0.." +
                                std::to_string(trunc()));
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

Series Series::truncated(std::int64_t new_trunc) const {
    if (new_trunc < 0 || new_trunc > trunc())
        throw std::invalid_argument("new truncation order outside 0.." + std::to_string(trunc()));
    Series s(new_trunc);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
        s.coeffs_[i] = coeffs_[i];
    return s;
}

Series& Series::operator+=(const Series& other) {
    check_same_trunc(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Series& other) {
    *this = *this * other;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    check_same_trunc(a, b);
    const auto& x = a.coeffs_;
    const auto& y = b.coeffs_;
    Series out(a.trunc());
    auto& z = out.coeffs_;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            if (y[j] == 0)
                continue;
            z[i + j] += x[i] * y[j];
        }
    }
    return out;
}

Series geometric_inverse_factor(std::int64_t d, std::int64_t trunc) {
    if (d < 1)
        throw std::invalid_argument("exponent d must be >= 1");
    Series s(trunc);
    for (std::int64_t e = 0; e <= trunc; e += d)
        s.set_coeff(e, 1);
    return s;
}

Series finite_geometric_factor(std::int64_t j, std::int64_t c, std::int64_t trunc) {
    if (j < 1)
        throw std::invalid_argument("exponent j must be >= 1");
    if (c < 0)
        throw std::invalid_argument("power count c must be >= 0");
    Series s(trunc);
    for (std::int64_t t = 0; t <= c && t * j <= trunc; ++t)
        s.set_coeff(t * j, 1);
    return s;
}

Series one_minus_power(std::int64_t e, std::int64_t trunc) {
    if (e < 1)
        throw std::invalid_argument("exponent e must be >= 1");
    Series s = Series::one(trunc);
    if (e <= trunc)
        s.set_coeff(e, -1);
    return s;
}

SeriesComparison equal_up_to(const Series& a, const Series& b) {
    check_same_trunc(a, b);
    for (std::int64_t n = 0; n <= a.trunc(); ++n) {
        if (a.coeff(n) != b.coeff(n))
            return {false, n, a.coeff(n), b.coeff(n)};
    }
    return {};
}

std::string coefficient_table(const Series& s) {
    std::string out;
    for (std::int64_t n = 0; n <= s.trunc(); ++n) {
        out += std::to_string(n);
        out += '\t';
        out += s.coeff(n).str();
        out += '\n';
    }
    return out;
}

} // namespace initrep
