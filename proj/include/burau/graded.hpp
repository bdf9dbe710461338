#pragma once

#include "burau/linalg.hpp"

#include <string>
#include <vector>

namespace burau {

/// Element of the graded piece G_k, an integer matrix tagged with its degree k.
struct GradedElement {
    int degree = 1;
    IntMatrix matrix;

    GradedElement() = default;
    GradedElement(int k, IntMatrix m) : degree(k), matrix(std::move(m)) {}

    int n() const { return matrix.rows(); }
    bool is_zero() const { return matrix.is_zero(); }

    /// Names of the failed G_k conditions; empty when the element is valid.
    std::vector<std::string> violations() const;
    bool valid() const { return violations().empty(); }
    /// Same matrix read in another degree of the same parity (both >= 2, or both 1).
    GradedElement transported(int k) const;

    GradedElement operator-() const { return {degree, -matrix}; }
    friend bool operator==(const GradedElement& a, const GradedElement& b)
    {
        return a.degree == b.degree && a.matrix == b.matrix;
    }
    friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }
};

}  // namespace burau
