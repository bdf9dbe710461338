#include "burau/laurent.hpp"

#include "burau/errors.hpp"

#include <algorithm>
#include <sstream>

namespace burau {

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(BigInt c)
{
    if (c != 0)
        coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent)
{
    LaurentPoly p(std::move(c));
    if (!p.is_zero())
        p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::s() { return t() - LaurentPoly(1); }

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms)
{
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        p += monomial(c, e);
    return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

BigInt LaurentPoly::coeff(int exponent) const
{
    if (exponent < low_ || exponent > high())
        return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const
{
    std::vector<std::pair<int, BigInt>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

void LaurentPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty())
        low_ = 0;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    const int lo = std::min(low_, other.low_);
    const int hi = std::max(high(), other.high());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
    coeffs_ = std::move(out);
    low_ = lo;
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const
{
    if (c == 0)
        return {};
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

LaurentPoly LaurentPoly::divided_exact(const BigInt& c) const
{
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) {
        if (x % c != 0)
            throw Error("LaurentPoly::divided_exact: coefficient " + x.str() + " not divisible by " + c.str());
        x /= c;
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const
{
    if (is_zero())
        return {};
    LaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.low_ = -high();
    return r;
}

BigInt LaurentPoly::eval_at_one() const
{
    BigInt sum = 0;
    for (const auto& c : coeffs_)
        sum += c;
    return sum;
}

TruncSeries LaurentPoly::to_series(int precision) const
{
    if (precision < 1)
        throw Error("to_series: precision must be positive");
    TruncSeries out(precision);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const long long e = low_ + static_cast<long long>(i);
        // (1+s)^e = sum_j C(e, j) s^j, valid for negative e as well.
        BigInt b = 1;
        for (int j = 0; j < precision; ++j) {
            if (j > 0) {
                b *= BigInt(e - j + 1);
                b /= j;
            }
            out[j] += coeffs_[i] * b;
        }
    }
    return out;
}

int LaurentPoly::s_valuation() const
{
    if (is_zero())
        return kInfinite;
    // t is a unit coprime to s, so only the polynomial part q(t) = p / t^low matters.
    // Repeated synthetic division by (t - 1) while q(1) == 0.
    std::vector<BigInt> q = coeffs_;  // ascending powers
    int k = 0;
    while (true) {
        BigInt sum = 0;
        for (const auto& c : q)
            sum += c;
        if (sum != 0)
            return k;
        // q(t) = (t - 1) r(t); with descending coefficients r_{m-1} = q_m,
        // r_{i-1} = q_i + r_i.
        const std::size_t m = q.size() - 1;
        std::vector<BigInt> r(m);
        BigInt carry = 0;
        for (std::size_t i = m; i >= 1; --i) {
            carry += q[i];
            r[i - 1] = carry;
        }
        q = std::move(r);
        ++k;
    }
}

std::optional<std::pair<int, int>> LaurentPoly::as_unit() const
{
    if (coeffs_.size() != 1)
        return std::nullopt;
    if (coeffs_[0] == 1)
        return std::make_pair(1, low_);
    if (coeffs_[0] == -1)
        return std::make_pair(-1, low_);
    return std::nullopt;
}

std::string LaurentPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const BigInt& c = *it;
        if (c == 0)
            continue;
        const int e = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(int precision)
{
    if (precision < 1)
        throw Error("TruncSeries: precision must be positive");
    coeffs_.assign(static_cast<std::size_t>(precision), BigInt(0));
}

TruncSeries::TruncSeries(int precision, std::vector<BigInt> coeffs) : TruncSeries(precision)
{
    if (static_cast<int>(coeffs.size()) > precision)
        coeffs.resize(static_cast<std::size_t>(precision));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncSeries TruncSeries::one(int precision)
{
    TruncSeries r(precision);
    r[0] = 1;
    return r;
}

bool TruncSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

int TruncSeries::valuation() const
{
    for (int d = 0; d < precision(); ++d)
        if (coeffs_[static_cast<std::size_t>(d)] != 0)
            return d;
    return precision();
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other)
{
    if (precision() != other.precision())
        throw DimensionMismatch("TruncSeries: precision mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other)
{
    if (precision() != other.precision())
        throw DimensionMismatch("TruncSeries: precision mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    if (a.precision() != b.precision())
        throw DimensionMismatch("TruncSeries: precision mismatch");
    const int n = a.precision();
    TruncSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

std::string TruncSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d < precision(); ++d) {
        const BigInt& c = (*this)[d];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "s";
        if (d != 1)
            os << "^" << d;
    }
    if (first)
        os << "0";
    os << " + O(s^" << precision() << ")";
    return os.str();
}

}  // namespace burau
