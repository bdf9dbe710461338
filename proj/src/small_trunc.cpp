#include "burau/small_trunc.hpp"

namespace burau {

SmallTrunc::SmallTrunc(int n, int precision)
    : n_(n), precision_(precision), stride_(kernels::padded_stride(n)),
      data_(static_cast<std::size_t>(precision) * n * kernels::padded_stride(n), 0)
{
    if (precision < 1)
        throw Error("SmallTrunc: precision must be positive");
}

SmallTrunc SmallTrunc::identity(int n, int precision)
{
    SmallTrunc m(n, precision);
    for (int i = 0; i < n; ++i)
        m.at(0, i, i) = 1;
    return m;
}

std::optional<SmallTrunc> SmallTrunc::from_big(const TruncMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("SmallTrunc: matrix is not square");
    SmallTrunc r(m.rows(), m.precision());
    for (int d = 0; d < m.precision(); ++d)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const auto v = to_i64(m.plane(d)(i, j));
                if (!v || *v == std::numeric_limits<std::int64_t>::min())
                    return std::nullopt;
                r.at(d, i, j) = *v;
            }
    return r;
}

TruncMatrix SmallTrunc::to_big() const
{
    TruncMatrix m(n_, n_, precision_);
    for (int d = 0; d < precision_; ++d)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m.plane(d)(i, j) = at(d, i, j);
    return m;
}

std::int64_t SmallTrunc::max_abs() const
{
    if (max_abs_ < 0)
        max_abs_ = kernels::max_abs(data_.data(), data_.size());
    return max_abs_;
}

SmallTrunc operator*(const SmallTrunc& a, const SmallTrunc& b)
{
    if (a.n_ != b.n_ || a.precision_ != b.precision_)
        throw DimensionMismatch("SmallTrunc product: shape or precision mismatch");
    if (!kernels::product_fits(a.max_abs(), b.max_abs(), a.n_, a.precision_))
        throw FixedWidthOverflow();
    SmallTrunc c(a.n_, a.precision_);
    kernels::trunc_matmul(a.data_.data(), b.data_.data(), c.data_.data(), a.n_, a.precision_, a.stride_);
    return c;
}

Depth SmallTrunc::depth() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(0, i, j) != (i == j ? 1 : 0))
                return {0, false};
    for (int d = 1; d < precision_; ++d)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(d, i, j) != 0)
                    return {d, false};
    return {precision_, true};
}

}  // namespace burau
