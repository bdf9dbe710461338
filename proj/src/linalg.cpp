#include "burau/linalg.hpp"

#include <sstream>

namespace burau {

std::string Depth::to_string() const
{
    if (infinite())
        return "infinity";
    return (lower_bound ? ">=" : "") + std::to_string(value);
}

// ---------------------------------------------------------------------------

TruncMatrix::TruncMatrix(int rows, int cols, int precision) : rows_(rows), cols_(cols)
{
    if (precision < 1)
        throw Error("TruncMatrix: precision must be positive");
    planes_.assign(static_cast<std::size_t>(precision), IntMatrix(rows, cols));
}

TruncMatrix::TruncMatrix(std::vector<IntMatrix> planes) : planes_(std::move(planes))
{
    if (planes_.empty())
        throw Error("TruncMatrix: precision must be positive");
    rows_ = planes_[0].rows();
    cols_ = planes_[0].cols();
    for (const auto& p : planes_)
        if (p.rows() != rows_ || p.cols() != cols_)
            throw DimensionMismatch("TruncMatrix: planes differ in shape");
}

TruncMatrix TruncMatrix::identity(int n, int precision)
{
    TruncMatrix m(n, n, precision);
    m.planes_[0] = IntMatrix::identity(n);
    return m;
}

TruncMatrix TruncMatrix::from_laurent(const LaurentMatrix& a, int precision)
{
    TruncMatrix m(a.rows(), a.cols(), precision);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const TruncSeries e = a(i, j).to_series(precision);
            for (int d = 0; d < precision; ++d)
                m.planes_[static_cast<std::size_t>(d)](i, j) = e[d];
        }
    return m;
}

TruncSeries TruncMatrix::entry(int i, int j) const
{
    TruncSeries e(precision());
    for (int d = 0; d < precision(); ++d)
        e[d] = plane(d)(i, j);
    return e;
}

TruncMatrix& TruncMatrix::operator+=(const TruncMatrix& o)
{
    if (o.precision() != precision())
        throw DimensionMismatch("TruncMatrix: precision mismatch");
    for (std::size_t d = 0; d < planes_.size(); ++d)
        planes_[d] += o.planes_[d];
    return *this;
}

TruncMatrix& TruncMatrix::operator-=(const TruncMatrix& o)
{
    if (o.precision() != precision())
        throw DimensionMismatch("TruncMatrix: precision mismatch");
    for (std::size_t d = 0; d < planes_.size(); ++d)
        planes_[d] -= o.planes_[d];
    return *this;
}

TruncMatrix operator*(const TruncMatrix& a, const TruncMatrix& b)
{
    if (a.precision() != b.precision())
        throw DimensionMismatch("TruncMatrix product: precision mismatch");
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("TruncMatrix product: shape mismatch");
    const int n = a.precision();
    TruncMatrix c(a.rows_, b.cols_, n);
    for (int x = 0; x < n; ++x) {
        if (a.plane(x).is_zero())
            continue;
        for (int y = 0; x + y < n; ++y)
            c.plane(x + y) += a.plane(x) * b.plane(y);
    }
    return c;
}

TruncMatrix TruncMatrix::scaled(const TruncSeries& c) const
{
    if (c.precision() != precision())
        throw DimensionMismatch("TruncMatrix::scaled: precision mismatch");
    const int n = precision();
    TruncMatrix r(rows_, cols_, n);
    for (int x = 0; x < n; ++x) {
        if (c[x] == 0)
            continue;
        for (int y = 0; x + y < n; ++y)
            r.plane(x + y) += plane(y).scaled(c[x]);
    }
    return r;
}

TruncMatrix TruncMatrix::inverse() const
{
    if (rows_ != cols_)
        throw DimensionMismatch("TruncMatrix::inverse: not square");
    const IntMatrix& p0 = plane(0);
    for (int i = 0; i < rows_; ++i) {
        int nz_row = 0;
        int nz_col = 0;
        for (int j = 0; j < cols_; ++j) {
            if (p0(i, j) != 0) {
                ++nz_row;
                if (p0(i, j) != 1 && p0(i, j) != -1)
                    nz_row = 2;
            }
            if (p0(j, i) != 0)
                ++nz_col;
        }
        if (nz_row != 1 || nz_col != 1)
            throw NonUnitDeterminant("TruncMatrix::inverse: constant term is not a signed permutation");
    }
    const IntMatrix p0_inv = p0.transpose();
    const int n = precision();
    TruncMatrix x(rows_, cols_, n);
    x.plane(0) = p0_inv;
    for (int d = 1; d < n; ++d) {
        IntMatrix acc(rows_, cols_);
        for (int a = 1; a <= d; ++a)
            if (!plane(a).is_zero())
                acc += plane(a) * x.plane(d - a);
        x.plane(d) = -(p0_inv * acc);
    }
    return x;
}

TruncMatrix TruncMatrix::truncated(int precision) const
{
    if (precision < 1 || precision > this->precision())
        throw Error("TruncMatrix::truncated: invalid precision");
    return TruncMatrix(std::vector<IntMatrix>(planes_.begin(), planes_.begin() + precision));
}

Depth TruncMatrix::depth() const
{
    if (rows_ != cols_)
        throw DimensionMismatch("depth: not square");
    if (plane(0) != IntMatrix::identity(rows_))
        return {0, false};
    for (int d = 1; d < precision(); ++d)
        if (!plane(d).is_zero())
            return {d, false};
    return {precision(), true};
}

BigInt TruncMatrix::max_abs() const
{
    BigInt m = 0;
    for (const auto& p : planes_)
        for (const auto& x : p.data())
            if (abs(x) > m)
                m = abs(x);
    return m;
}

// ---------------------------------------------------------------------------

LaurentMatrix laurent_identity(int n) { return LaurentMatrix::identity(n); }

LaurentMatrix from_int(const IntMatrix& m)
{
    return m.map([](const BigInt& x) { return LaurentPoly(x); });
}

LaurentMatrix star(const LaurentMatrix& a)
{
    LaurentMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(j, i) = a(i, j).bar();
    return r;
}

IntMatrix reduce_at_one(const LaurentMatrix& a)
{
    return a.map([](const LaurentPoly& p) { return p.eval_at_one(); });
}

namespace {

// Faddeev-LeVerrier. Returns the characteristic polynomial coefficients and the
// final auxiliary matrix M_n, which satisfies A M_n = -c_0 I.
std::pair<std::vector<LaurentPoly>, LaurentMatrix> leverrier(const LaurentMatrix& a)
{
    if (!a.is_square())
        throw DimensionMismatch("characteristic polynomial of non-square matrix");
    const int n = a.rows();
    std::vector<LaurentPoly> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    LaurentMatrix m(n, n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int i = 0; i < n; ++i)
            m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        const LaurentPoly tr = (a * m).trace();
        c[static_cast<std::size_t>(n - k)] = (-tr).divided_exact(k);
    }
    return {std::move(c), std::move(m)};
}

}  // namespace

std::vector<LaurentPoly> charpoly(const LaurentMatrix& a) { return leverrier(a).first; }

LaurentPoly determinant(const LaurentMatrix& a)
{
    const auto c = charpoly(a);
    return a.rows() % 2 == 0 ? c[0] : -c[0];
}

LaurentMatrix inverse(const LaurentMatrix& a)
{
    auto [c, m] = leverrier(a);
    const auto unit = c[0].as_unit();
    if (!unit)
        throw NonUnitDeterminant("inverse: determinant " + (a.rows() % 2 == 0 ? c[0] : -c[0]).to_string() +
                                 " is not a unit of Z[t, 1/t]");
    // A^{-1} = -M_n / c_0 and 1 / (e t^k) = e t^{-k}.
    const LaurentPoly factor = LaurentPoly::monomial(-unit->first, -unit->second);
    return m.map([&](const LaurentPoly& p) { return p * factor; });
}

std::vector<IntMatrix> s_expand(const LaurentMatrix& a, int count)
{
    const TruncMatrix t = TruncMatrix::from_laurent(a, count);
    return t.planes();
}

LaurentMatrix s_reassemble(const std::vector<IntMatrix>& coeffs)
{
    if (coeffs.empty())
        throw Error("s_reassemble: empty expansion");
    LaurentMatrix r(coeffs[0].rows(), coeffs[0].cols());
    LaurentPoly s_pow = 1;
    for (const auto& c : coeffs) {
        r += from_int(c).map([&](const LaurentPoly& p) { return p * s_pow; });
        s_pow *= LaurentPoly::s();
    }
    return r;
}

Depth depth(const LaurentMatrix& a)
{
    if (!a.is_square())
        throw DimensionMismatch("depth: not square");
    int best = Depth::kInfinite;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            LaurentPoly e = a(i, j);
            if (i == j)
                e -= LaurentPoly(1);
            best = std::min(best, e.s_valuation());
            if (best == 0)
                return {0, false};
        }
    return {best, false};
}

// ---------------------------------------------------------------------------

IntMatrix int_identity(int n) { return IntMatrix::identity(n); }

IntMatrix all_ones(int n)
{
    IntMatrix m(n, n);
    for (auto& x : m.data())
        x = 1;
    return m;
}

IntMatrix unit_matrix(int n, int a, int b)
{
    if (a < 1 || b < 1 || a > n || b > n)
        throw IndexOutOfRange("unit_matrix: index out of range");
    IntMatrix m(n, n);
    m(a - 1, b - 1) = 1;
    return m;
}

IntMatrix perm_matrix(const Perm& p)
{
    const int n = p.size();
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        m(i - 1, p(i) - 1) = 1;
    return m;
}

std::optional<Perm> as_permutation(const IntMatrix& m)
{
    if (!m.is_square())
        return std::nullopt;
    const int n = m.rows();
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int j = 0; j < n; ++j) {
            if (m(i, j) == 0)
                continue;
            if (m(i, j) != 1)
                return std::nullopt;
            ++count;
            images[static_cast<std::size_t>(i)] = j + 1;
        }
        if (count != 1)
            return std::nullopt;
    }
    try {
        return Perm::from_images(images);
    } catch (const Error&) {
        return std::nullopt;
    }
}

QMatrix to_rational(const IntMatrix& m)
{
    return m.map([](const BigInt& x) { return Rational(x); });
}

std::optional<IntMatrix> to_integral(const QMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1)
                return std::nullopt;
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

std::vector<BigInt> vectorize(const IntMatrix& m) { return m.data(); }

IntMatrix unvectorize(const std::vector<BigInt>& v, int rows, int cols)
{
    if (static_cast<int>(v.size()) != rows * cols)
        throw DimensionMismatch("unvectorize: length mismatch");
    IntMatrix m(rows, cols);
    m.data() = v;
    return m;
}

namespace {

template <typename M>
std::string render(const M& m)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) { return render(m); }
std::string to_string(const QMatrix& m) { return render(m); }
std::string to_string(const LaurentMatrix& m) { return render(m); }

}  // namespace burau
