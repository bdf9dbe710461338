#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the evaluation or lattice code under test.

#include "burau/braid.hpp"
#include "burau/linalg.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using burau::BigInt;
using burau::Rational;

using Poly = std::map<int, BigInt>;  // exponent -> coefficient

inline Poly poly_of(const burau::LaurentPoly& p)
{
    Poly r;
    for (const auto& [e, c] : p.terms())
        r[e] = c;
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            r[ea + eb] += ca * cb;
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

inline Rational rpow(const Rational& t, int e)
{
    Rational r = 1;
    const Rational b = e >= 0 ? t : Rational(1) / t;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k)
        r *= b;
    return r;
}

inline Rational eval_poly(const burau::LaurentPoly& p, const Rational& t)
{
    Rational r = 0;
    for (const auto& [e, c] : p.terms())
        r += Rational(c) * rpow(t, e);
    return r;
}

using RMat = std::vector<std::vector<Rational>>;

inline RMat eval_matrix(const burau::LaurentMatrix& m, const Rational& t)
{
    RMat r(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r[i][j] = eval_poly(m(i, j), t);
    return r;
}

inline RMat rmul(const RMat& a, const RMat& b)
{
    RMat c(a.size(), std::vector<Rational>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// Burau generator at a numeric t, written out from the block definition.
inline RMat numeric_gen(int n, int i, int sign, const Rational& t)
{
    RMat m(n, std::vector<Rational>(n));
    for (int k = 0; k < n; ++k)
        m[k][k] = 1;
    const int a = i - 1, b = i;
    if (sign > 0) {
        m[a][a] = 1 - t;
        m[a][b] = 1;
        m[b][a] = t;
        m[b][b] = 0;
    } else {
        m[a][a] = 0;
        m[a][b] = 1 / t;
        m[b][a] = 1;
        m[b][b] = 1 - 1 / t;
    }
    return m;
}

/// Product of generator matrices over the flattened letters, at numeric t.
inline RMat numeric_eval(const burau::BraidWord& w, const Rational& t)
{
    const int n = w.strands();
    RMat acc(n, std::vector<Rational>(n));
    for (int k = 0; k < n; ++k)
        acc[k][k] = 1;
    for (const auto& l : w.flatten())
        acc = rmul(acc, numeric_gen(n, l.gen, l.sign, t));
    return acc;
}

/// Largest k with (t - 1)^k dividing p, by repeated synthetic division; -1 for p = 0.
inline int s_valuation(const burau::LaurentPoly& p)
{
    if (p.is_zero())
        return -1;
    // Shift to an ordinary polynomial in t; t^low is a unit.
    std::vector<BigInt> c;
    for (int e = p.low(); e <= p.high(); ++e)
        c.push_back(p.coeff(e));
    int k = 0;
    while (true) {
        BigInt sum = 0;
        for (const auto& x : c)
            sum += x;
        if (sum != 0)
            return k;
        // divide by (t - 1): coefficients low to high
        std::vector<BigInt> q(c.size() - 1);
        BigInt carry = 0;
        for (std::size_t d = c.size() - 1; d >= 1; --d) {
            carry += c[d];
            q[d - 1] = carry;
        }
        c = q;
        ++k;
    }
}

/// Depth of A: min over entries of the s-valuation of A - I.
inline int depth(const burau::LaurentMatrix& a)
{
    int best = -1;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const int v = s_valuation(a(i, j) - burau::LaurentPoly(i == j ? 1 : 0));
            if (v >= 0 && (best < 0 || v < best))
                best = v;
        }
    return best;  // -1 means A = I
}

/// Rank over Q by Gaussian elimination.
inline int rank(std::vector<std::vector<Rational>> rows)
{
    int r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != static_cast<std::size_t>(r) && rows[k][c] != 0) {
                const Rational f = rows[k][c] / rows[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    rows[k][j] -= f * rows[r][j];
            }
        ++r;
    }
    return r;
}

inline std::vector<Rational> flat(const burau::IntMatrix& m)
{
    std::vector<Rational> v;
    for (const auto& x : m.data())
        v.emplace_back(x);
    return v;
}

/// Dimension of the solution space of the G_k conditions on n x n matrices:
/// column sums zero, symmetric (k odd) or skew (k even), trace zero for k >= 2.
inline int g_dimension(int n, int k)
{
    std::vector<std::vector<Rational>> cons;
    auto var = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> c(n * n);
        for (int i = 0; i < n; ++i)
            c[var(i, j)] = 1;
        cons.push_back(c);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<Rational> c(n * n);
            if (k % 2 == 1) {
                if (i == j)
                    continue;
                c[var(i, j)] = 1;
                c[var(j, i)] = -1;
            } else {
                c[var(i, j)] += 1;
                c[var(j, i)] += 1;
            }
            cons.push_back(c);
        }
    if (k >= 2) {
        std::vector<Rational> c(n * n);
        for (int i = 0; i < n; ++i)
            c[var(i, i)] = 1;
        cons.push_back(c);
    }
    return n * n - rank(cons);
}

/// Random freely-unreduced word with length in [1, max_len].
inline burau::BraidWord random_word(std::mt19937_64& rng, int n, int max_len)
{
    std::uniform_int_distribution<int> len(1, max_len), gen(1, n - 1), sgn(0, 1);
    std::vector<burau::Letter> letters;
    const int l = len(rng);
    for (int k = 0; k < l; ++k)
        letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return burau::BraidWord::literal(n, letters);
}

/// Permutation of a word, composing transpositions letter by letter.
inline burau::Perm permutation(const burau::BraidWord& w)
{
    burau::Perm p(w.strands());
    for (const auto& l : w.flatten())
        p = p.then(burau::Perm::transposition(w.strands(), l.gen, l.gen + 1));
    return p;
}

}  // namespace oracle
