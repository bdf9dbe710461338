#pragma once

#include "burau/bigint.hpp"
#include "burau/laurent.hpp"
#include "burau/matrix.hpp"
#include "burau/perm.hpp"

#include <limits>
#include <string>
#include <vector>

namespace burau {

using LaurentMatrix = Matrix<LaurentPoly>;
using IntMatrix = Matrix<BigInt>;
using QMatrix = Matrix<Rational>;

/// s-adic depth of a matrix: the largest k with A = I mod s^k.
///
/// The exact path reports `infinite()` only for A = I. A truncated matrix that
/// equals I at its full precision N reports {N, lower_bound = true}.
struct Depth {
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    int value = 0;
    bool lower_bound = false;

    static Depth infinite_depth() { return {kInfinite, false}; }
    bool infinite() const { return value == kInfinite; }
    /// True when the certified depth is at least k.
    bool at_least(int k) const { return value >= k; }
    std::string to_string() const;

    friend bool operator==(const Depth& a, const Depth& b)
    {
        return a.value == b.value && a.lower_bound == b.lower_bound;
    }
};

/// n x m matrix over Z[s]/(s^N), stored as N integer coefficient planes.
class TruncMatrix {
public:
    TruncMatrix() = default;
    TruncMatrix(int rows, int cols, int precision);
    TruncMatrix(std::vector<IntMatrix> planes);

    static TruncMatrix identity(int n, int precision);
    static TruncMatrix from_laurent(const LaurentMatrix& a, int precision);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int precision() const { return static_cast<int>(planes_.size()); }
    /// Coefficient matrix of s^d.
    const IntMatrix& plane(int d) const { return planes_[static_cast<std::size_t>(d)]; }
    IntMatrix& plane(int d) { return planes_[static_cast<std::size_t>(d)]; }
    const std::vector<IntMatrix>& planes() const { return planes_; }
    TruncSeries entry(int i, int j) const;

    TruncMatrix& operator+=(const TruncMatrix& o);
    TruncMatrix& operator-=(const TruncMatrix& o);
    friend TruncMatrix operator+(TruncMatrix a, const TruncMatrix& b) { return a += b; }
    friend TruncMatrix operator-(TruncMatrix a, const TruncMatrix& b) { return a -= b; }
    friend TruncMatrix operator*(const TruncMatrix& a, const TruncMatrix& b);
    TruncMatrix scaled(const TruncSeries& c) const;
    friend bool operator==(const TruncMatrix& a, const TruncMatrix& b) { return a.planes_ == b.planes_; }
    friend bool operator!=(const TruncMatrix& a, const TruncMatrix& b) { return !(a == b); }

    /// Inverse in M_n(Z[s]/(s^N)); the constant plane must be a signed permutation matrix.
    TruncMatrix inverse() const;
    /// Same matrix at a lower precision.
    TruncMatrix truncated(int precision) const;
    Depth depth() const;
    /// Largest absolute coefficient, for overflow guards.
    BigInt max_abs() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<IntMatrix> planes_;
};

// --- Laurent matrices ------------------------------------------------------

LaurentMatrix laurent_identity(int n);
LaurentMatrix from_int(const IntMatrix& m);
/// (A*)_ij = bar(A_ji).
LaurentMatrix star(const LaurentMatrix& a);
/// Entrywise value at t = 1.
IntMatrix reduce_at_one(const LaurentMatrix& a);
/// Determinant via the characteristic polynomial (division-free in Z[t, 1/t]).
LaurentPoly determinant(const LaurentMatrix& a);
/// Characteristic polynomial coefficients c_0..c_n of det(xI - A), c_n = 1.
std::vector<LaurentPoly> charpoly(const LaurentMatrix& a);
/// Exact inverse; throws NonUnitDeterminant unless det(A) = +-t^a.
LaurentMatrix inverse(const LaurentMatrix& a);
/// [(A)_(0), ..., (A)_(N-1)], the s-adic expansion coefficients.
std::vector<IntMatrix> s_expand(const LaurentMatrix& a, int count);
/// Sum_i s^i M_i as a Laurent matrix.
LaurentMatrix s_reassemble(const std::vector<IntMatrix>& coeffs);
/// Exact s-adic depth of a square matrix.
Depth depth(const LaurentMatrix& a);

// --- Integer matrices ------------------------------------------------------

IntMatrix int_identity(int n);
IntMatrix all_ones(int n);
/// Unit matrix E_ab (1-based indices).
IntMatrix unit_matrix(int n, int a, int b);
/// Permutation matrix with a 1 at (i, pi(i)); perm_matrix(p.then(q)) = perm_matrix(p) * perm_matrix(q).
IntMatrix perm_matrix(const Perm& p);
/// Reads a 0/1 permutation matrix back; nullopt if it is not one.
std::optional<Perm> as_permutation(const IntMatrix& m);
QMatrix to_rational(const IntMatrix& m);
/// Integer matrix from a rational one; nullopt if some entry is not integral.
std::optional<IntMatrix> to_integral(const QMatrix& m);
/// Row-major vectorization.
std::vector<BigInt> vectorize(const IntMatrix& m);
IntMatrix unvectorize(const std::vector<BigInt>& v, int rows, int cols);

std::string to_string(const IntMatrix& m);
std::string to_string(const QMatrix& m);
std::string to_string(const LaurentMatrix& m);

}  // namespace burau
