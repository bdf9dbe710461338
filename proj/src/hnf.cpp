#include "burau/hnf.hpp"

#include <utility>

namespace burau {

namespace {

void axpy(IntVector& y, const BigInt& q, const IntVector& x)
{
    for (std::size_t k = 0; k < y.size(); ++k)
        if (x[k] != 0)
            y[k] -= q * x[k];
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

HermiteForm hermite_form(const std::vector<IntVector>& rows, int dim, bool with_transform)
{
    HermiteForm f;
    f.h = rows;
    const int m = static_cast<int>(rows.size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != dim)
            throw DimensionMismatch("hermite_form: row length mismatch");
    if (with_transform) {
        f.u.assign(static_cast<std::size_t>(m), IntVector(static_cast<std::size_t>(m), BigInt(0)));
        for (int i = 0; i < m; ++i)
            f.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    auto& h = f.h;
    auto& u = f.u;
    int r = 0;
    for (int c = 0; c < dim && r < m; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        bool found = false;
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                const BigInt& x = h[static_cast<std::size_t>(i)][cc];
                if (x == 0)
                    continue;
                if (best < 0 || abs(x) < abs(h[static_cast<std::size_t>(best)][cc]))
                    best = i;
            }
            if (best < 0)
                break;
            found = true;
            if (best != r) {
                std::swap(h[static_cast<std::size_t>(best)], h[static_cast<std::size_t>(r)]);
                if (with_transform)
                    std::swap(u[static_cast<std::size_t>(best)], u[static_cast<std::size_t>(r)]);
            }
            const auto rr = static_cast<std::size_t>(r);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                if (h[ii][cc] == 0)
                    continue;
                const BigInt q = h[ii][cc] / h[rr][cc];
                axpy(h[ii], q, h[rr]);
                if (with_transform)
                    axpy(u[ii], q, u[rr]);
                if (h[ii][cc] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!found)
            continue;
        const auto rr = static_cast<std::size_t>(r);
        if (h[rr][cc] < 0) {
            for (auto& x : h[rr])
                x = -x;
            if (with_transform)
                for (auto& x : u[rr])
                    x = -x;
        }
        for (int i = 0; i < r; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            const BigInt q = floor_div(h[ii][cc], h[rr][cc]);
            if (q == 0)
                continue;
            axpy(h[ii], q, h[rr]);
            if (with_transform)
                axpy(u[ii], q, u[rr]);
        }
        f.pivot_cols.push_back(c);
        ++r;
    }
    f.rank = r;
    return f;
}

// ---------------------------------------------------------------------------

Lattice Lattice::span(const std::vector<IntVector>& generators, int dim)
{
    const HermiteForm f = hermite_form(generators, dim, false);
    Lattice l(dim);
    l.basis_.assign(f.h.begin(), f.h.begin() + f.rank);
    l.pivots_ = f.pivot_cols;
    return l;
}

Lattice Lattice::span(const std::vector<IntMatrix>& generators)
{
    if (generators.empty())
        throw Error("Lattice::span: no generators to infer the dimension from");
    std::vector<IntVector> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators)
        rows.push_back(vectorize(g));
    return span(rows, static_cast<int>(rows[0].size()));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const
{
    if (static_cast<int>(v.size()) != dim_)
        throw DimensionMismatch("Lattice: vector length mismatch");
    IntVector y = v;
    IntVector x(basis_.size());
    std::size_t next = 0;
    for (std::size_t c = 0; c < y.size(); ++c) {
        if (y[c] == 0)
            continue;
        while (next < pivots_.size() && static_cast<std::size_t>(pivots_[next]) < c)
            ++next;
        if (next == pivots_.size() || static_cast<std::size_t>(pivots_[next]) != c)
            return std::nullopt;
        const BigInt& p = basis_[next][c];
        if (y[c] % p != 0)
            return std::nullopt;
        x[next] = y[c] / p;
        axpy(y, x[next], basis_[next]);
    }
    return x;
}

bool Lattice::contains(const Lattice& other) const
{
    for (const auto& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

Lattice Lattice::with(const IntVector& v) const
{
    std::vector<IntVector> rows = basis_;
    rows.push_back(v);
    return span(rows, dim_);
}

BigInt Lattice::pivot_product() const
{
    BigInt p = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        p *= basis_[i][static_cast<std::size_t>(pivots_[i])];
    return p;
}

// ---------------------------------------------------------------------------

std::optional<IntVector> hnf_solve(const std::vector<IntMatrix>& generators, const IntMatrix& target)
{
    std::vector<IntVector> rows;
    for (const auto& g : generators) {
        if (g.rows() != target.rows() || g.cols() != target.cols())
            throw DimensionMismatch("hnf_solve: generator shape differs from target");
        rows.push_back(vectorize(g));
    }
    const int dim = target.rows() * target.cols();
    if (rows.empty())
        return target.is_zero() ? std::optional<IntVector>(IntVector{}) : std::nullopt;
    const HermiteForm f = hermite_form(rows, dim, true);
    IntVector y = vectorize(target);
    IntVector x(static_cast<std::size_t>(f.rank));
    for (int i = 0; i < f.rank; ++i) {
        const auto c = static_cast<std::size_t>(f.pivot_cols[static_cast<std::size_t>(i)]);
        const auto& row = f.h[static_cast<std::size_t>(i)];
        if (y[c] % row[c] != 0)
            return std::nullopt;
        x[static_cast<std::size_t>(i)] = y[c] / row[c];
        axpy(y, x[static_cast<std::size_t>(i)], row);
    }
    for (const auto& e : y)
        if (e != 0)
            return std::nullopt;
    IntVector coeffs(rows.size(), BigInt(0));
    for (int i = 0; i < f.rank; ++i) {
        const BigInt& xi = x[static_cast<std::size_t>(i)];
        if (xi == 0)
            continue;
        const auto& urow = f.u[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            coeffs[k] += xi * urow[k];
    }
    return coeffs;
}

bool hnf_lattice_membership(const std::vector<IntMatrix>& generators, const IntMatrix& target)
{
    if (generators.empty())
        return target.is_zero();
    return Lattice::span(generators).contains(target);
}

std::vector<IntVector> hnf_kernel(const std::vector<IntVector>& generators, int dim)
{
    const HermiteForm f = hermite_form(generators, dim, true);
    return {f.u.begin() + f.rank, f.u.end()};
}

std::vector<IntVector> hnf_kernel(const std::vector<IntMatrix>& generators)
{
    if (generators.empty())
        return {};
    std::vector<IntVector> rows;
    for (const auto& g : generators)
        rows.push_back(vectorize(g));
    return hnf_kernel(rows, static_cast<int>(rows[0].size()));
}

}  // namespace burau
