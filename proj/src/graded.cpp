#include "burau/graded.hpp"

#include "burau/errors.hpp"

namespace burau {

std::vector<std::string> GradedElement::violations() const
{
    std::vector<std::string> out;
    if (degree < 1)
        out.emplace_back("degree >= 1");
    if (!matrix.is_square()) {
        out.emplace_back("square matrix");
        return out;
    }
    const int n = matrix.rows();
    for (int i = 0; i < n; ++i) {
        BigInt row = 0;
        for (int j = 0; j < n; ++j)
            row += matrix(i, j);
        if (row != 0) {
            out.emplace_back("M 1 = 0");
            break;
        }
    }
    const IntMatrix t = matrix.transpose();
    if (degree % 2 == 1 && t != matrix)
        out.emplace_back("symmetric");
    if (degree % 2 == 0 && t != -matrix)
        out.emplace_back("skew-symmetric");
    if (degree >= 3 && degree % 2 == 1 && matrix.trace() != 0)
        out.emplace_back("trace 0");
    return out;
}

GradedElement GradedElement::transported(int k) const
{
    if (k == degree)
        return *this;
    if (k < 2 || degree < 2 || (k - degree) % 2 != 0)
        throw DimensionMismatch("degree transport needs equal parity and degrees >= 2 (from " +
                                std::to_string(degree) + " to " + std::to_string(k) + ")");
    return {k, matrix};
}

}  // namespace burau
