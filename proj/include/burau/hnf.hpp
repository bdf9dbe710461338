#pragma once

#include "burau/bigint.hpp"
#include "burau/linalg.hpp"

#include <optional>
#include <vector>

namespace burau {

using IntVector = std::vector<BigInt>;

/// Row-style Hermite normal form H = U * G of an integer matrix G given as rows.
///
/// Columns are processed left to right; within a column the row with the smallest
/// nonzero absolute entry (lowest index on ties) becomes the pivot. Pivots are
/// positive and entries above a pivot are reduced into [0, pivot). The first
/// `rank` rows of H are nonzero, the remaining rows are zero, and the matching
/// rows of the unimodular U span the integer relations among the input rows.
struct HermiteForm {
    std::vector<IntVector> h;
    std::vector<IntVector> u;  // empty unless requested
    std::vector<int> pivot_cols;
    int rank = 0;
};

HermiteForm hermite_form(const std::vector<IntVector>& rows, int dim, bool with_transform);

/// Sublattice of Z^dim stored by its HNF basis.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(int dim) : dim_(dim) {}
    static Lattice span(const std::vector<IntVector>& generators, int dim);
    static Lattice span(const std::vector<IntMatrix>& generators);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<IntVector>& basis() const { return basis_; }
    /// Coordinates x with sum x_i basis_i = v, or nullopt when v is outside the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
    bool contains(const IntMatrix& m) const { return contains(vectorize(m)); }
    bool contains(const Lattice& other) const;
    /// Lattice generated by this one and v.
    Lattice with(const IntVector& v) const;
    /// Absolute value of the product of pivots (the index in its saturation only when full rank).
    BigInt pivot_product() const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.dim_ == b.dim_ && a.basis_ == b.basis_; }
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    int dim_ = 0;
    std::vector<IntVector> basis_;
    std::vector<int> pivots_;
};

/// Integer coefficients c with sum c_i * generators_i = target, or nullopt.
std::optional<IntVector> hnf_solve(const std::vector<IntMatrix>& generators, const IntMatrix& target);
bool hnf_lattice_membership(const std::vector<IntMatrix>& generators, const IntMatrix& target);
/// Basis of all integer relations sum c_i * generators_i = 0.
std::vector<IntVector> hnf_kernel(const std::vector<IntMatrix>& generators);
std::vector<IntVector> hnf_kernel(const std::vector<IntVector>& generators, int dim);

}  // namespace burau
