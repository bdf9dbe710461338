#pragma once

#include "burau/braid.hpp"
#include "burau/graded.hpp"
#include "burau/linalg.hpp"
#include "burau/small_trunc.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace burau {

/// beta(sigma_i^sign): I_{i-1} + [[1-t, 1], [t, 0]] + I_{n-i-1}, or its inverse.
LaurentMatrix burau_gen(int n, int i, int sign);
TruncMatrix burau_gen_trunc(int n, int i, int sign, int precision);

/// Exact image of a word; DAG subterms are evaluated once.
LaurentMatrix burau_eval(const BraidWord& w);
/// Image in M_n(Z[s]/(s^N)). Uses the int64 kernels while they stay exact.
TruncMatrix burau_eval_trunc(const BraidWord& w, int precision);
/// Fixed-width image, or nullopt when some intermediate product leaves the int64 range.
std::optional<SmallTrunc> burau_eval_small(const BraidWord& w, int precision);

/// v = (t, t^2, ..., t^n)^T as an n x 1 matrix.
LaurentMatrix vector_v(int n);
/// 1 = (1, ..., 1) as a 1 x n matrix.
LaurentMatrix vector_ones(int n);
/// 1 on the diagonal, -t below, -1/t above.
LaurentMatrix form_j(int n);

/// Outcome of the membership test; `violations` names each failed condition.
struct GammaReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline const char* kViolationFixesV = "A v = v";
inline const char* kViolationOnes = "1 A = 1";
inline const char* kViolationUnitary = "A* J A = J";
inline const char* kViolationPermutation = "A mod s is a permutation matrix";
inline const char* kViolationShape = "A is square";

GammaReport gamma_report(const LaurentMatrix& a);

/// Matrix known to lie in Gamma, with memoized depth and expansion coefficients.
class GammaElement {
public:
    /// Throws NotInGamma with the report text when a condition fails.
    static GammaElement checked(LaurentMatrix a, std::optional<BraidWord> word = std::nullopt);
    static GammaElement of_word(const BraidWord& w) { return checked(burau_eval(w), w); }

    const LaurentMatrix& matrix() const;
    const std::optional<BraidWord>& word() const { return word_; }
    int n() const { return matrix().rows(); }
    Depth depth() const;
    /// (A)_(k), computed once per element.
    const IntMatrix& coefficient(int k) const;

    friend bool operator==(const GammaElement& a, const GammaElement& b) { return a.matrix() == b.matrix(); }

private:
    struct Cache;
    explicit GammaElement(std::shared_ptr<Cache> c, std::optional<BraidWord> w)
        : cache_(std::move(c)), word_(std::move(w))
    {
    }

    std::shared_ptr<Cache> cache_;
    std::optional<BraidWord> word_;
};

/// (A)_(k) as an element of G_k; throws DepthTooSmall when depth(A) < k.
GradedElement gamma_coeff(const GammaElement& a, int k);
/// Same from a truncated matrix; its precision must exceed k.
GradedElement trunc_coeff(const TruncMatrix& a, int k);
/// Leading coefficient of a word in degree k via the truncated path at precision k + 1.
GradedElement word_coeff(const BraidWord& w, int k);

}  // namespace burau
