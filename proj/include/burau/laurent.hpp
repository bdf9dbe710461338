#pragma once

#include "burau/bigint.hpp"

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace burau {

class TruncSeries;

/// Element of Z[t, 1/t].
///
/// Stored densely as the coefficients of t^low, t^(low+1), ... with both ends
/// trimmed, so the zero polynomial has no coefficients and structural equality
/// is ring equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(BigInt c);     // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(BigInt c, int exponent);
    static LaurentPoly t() { return monomial(1, 1); }
    static LaurentPoly t_inv() { return monomial(1, -1); }
    /// s = t - 1.
    static LaurentPoly s();
    static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int exponent) const;
    /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<int, BigInt>> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const BigInt& c) const;
    /// Exact division by an integer; throws if some coefficient is not divisible.
    LaurentPoly divided_exact(const BigInt& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// t -> 1/t.
    LaurentPoly bar() const;
    /// Value at t = 1.
    BigInt eval_at_one() const;
    /// Image in Z[s]/(s^N) under t = 1 + s.
    TruncSeries to_series(int precision) const;
    /// Largest k with s^k | p in the Laurent ring; `kInfinite` for p = 0.
    int s_valuation() const;
    /// If p = c * t^a with c = +-1, returns {c, a}.
    std::optional<std::pair<int, int>> as_unit() const;

    std::string to_string() const;

    static constexpr int kInfinite = std::numeric_limits<int>::max();

private:
    void normalize();

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Element of Z[s]/(s^N).
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int precision);
    TruncSeries(int precision, std::vector<BigInt> coeffs);

    static TruncSeries one(int precision);

    int precision() const { return static_cast<int>(coeffs_.size()); }
    const BigInt& operator[](int d) const { return coeffs_[static_cast<std::size_t>(d)]; }
    BigInt& operator[](int d) { return coeffs_[static_cast<std::size_t>(d)]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// First nonzero degree, or precision() when the series vanishes.
    int valuation() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

}  // namespace burau
