#pragma once

#include "burau/kernels.hpp"
#include "burau/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace burau {

/// Thrown by the fixed-width path when a product would leave the exact int64 range.
class FixedWidthOverflow : public Error {
public:
    FixedWidthOverflow() : Error("fixed-width truncated product out of range") {}
};

/// Square matrix over Z[s]/(s^N) with int64 coefficients in the kernel layout.
///
/// Products go through the dispatched SIMD kernel and throw FixedWidthOverflow
/// instead of wrapping; callers fall back to TruncMatrix.
class SmallTrunc {
public:
    SmallTrunc() = default;
    SmallTrunc(int n, int precision);

    static SmallTrunc identity(int n, int precision);
    /// nullopt when some coefficient does not fit in int64.
    static std::optional<SmallTrunc> from_big(const TruncMatrix& m);
    TruncMatrix to_big() const;

    int n() const { return n_; }
    int precision() const { return precision_; }
    int stride() const { return stride_; }
    std::int64_t& at(int d, int i, int j) { return data_[index(d, i, j)]; }
    std::int64_t at(int d, int i, int j) const { return data_[index(d, i, j)]; }
    const std::int64_t* data() const { return data_.data(); }
    std::int64_t max_abs() const;

    friend SmallTrunc operator*(const SmallTrunc& a, const SmallTrunc& b);
    friend bool operator==(const SmallTrunc& a, const SmallTrunc& b)
    {
        return a.n_ == b.n_ && a.precision_ == b.precision_ && a.data_ == b.data_;
    }

    Depth depth() const;

private:
    std::size_t index(int d, int i, int j) const
    {
        return (static_cast<std::size_t>(d) * n_ + i) * stride_ + j;
    }

    int n_ = 0;
    int precision_ = 0;
    int stride_ = 0;
    std::vector<std::int64_t> data_;
    mutable std::int64_t max_abs_ = -1;
};

}  // namespace burau
