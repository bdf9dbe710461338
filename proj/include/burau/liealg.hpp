#pragma once

#include "burau/braid.hpp"
#include "burau/graded.hpp"
#include "burau/hnf.hpp"
#include "burau/perm.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace burau {

/// X_ij = E_ii + E_jj - E_ij - E_ji (degree 1).
GradedElement gen_x(int i, int j, int n);
/// Y_ijk = (E_ij - E_ji) - (E_ik - E_ki) + (E_jk - E_kj) (degree 2).
GradedElement gen_y(int i, int j, int k, int n);
/// <M, N> = MN - NM, in degree deg M + deg N.
GradedElement bracket(const GradedElement& m, const GradedElement& n);
/// P M P^-1 with P = perm_matrix(pi).
GradedElement sn_act(const Perm& pi, const GradedElement& m);
/// Distinct images of m under S_n, in the order of Perm::all.
std::vector<GradedElement> sn_orbit(const GradedElement& m);

/// Z-basis of G_k:
///   k = 1: X_ij (i < j);  even k: Y_ijn (i < j < n);  odd k >= 3: X_p - X_12 (p != 12).
std::vector<GradedElement> g_basis(int n, int k);
/// Rank of G_k as a lattice.
int g_rank(int n, int k);
Lattice g_lattice(int n, int k);
/// <G_1, G_k> inside G_{k+1}. Memoized per (n, k); the returned lattice is shared and immutable.
std::shared_ptr<const Lattice> bracket_lattice(int n, int k);

/// One summand X_I (x) W of an element of G_1 (x) G_{2k-1}.
struct KernelTerm {
    int i = 1, j = 2;
    GradedElement w;
    std::optional<BraidWord> witness;
};

/// Element sum X_{I_i} (x) W_i of the kernel of the bracket map G_1 (x) G_{2k-1} -> G_{2k}.
struct KernelElement {
    int degree = 3;  // 2k - 1
    std::vector<KernelTerm> terms;

    /// sum <X_{I_i}, W_i>; zero exactly for kernel members.
    GradedElement bracket_sum(int n) const;
    bool in_kernel(int n) const { return bracket_sum(n).is_zero(); }
};

/// Generators of the kernel computed by HNF (no canonical choice is implied).
std::vector<KernelElement> kernel_generators(int n, int degree);

/// Class of a degree-(2k+1) element modulo <G_1, G_{2k}>.
class CosetElement {
public:
    CosetElement(GradedElement rep, std::shared_ptr<const Lattice> modulus);
    static CosetElement of(const GradedElement& rep);

    const GradedElement& representative() const { return rep_; }
    const Lattice& modulus() const { return *modulus_; }
    bool is_zero() const { return modulus_->contains(rep_.matrix); }
    /// Same class read in another odd degree >= 3.
    CosetElement transported(int degree) const;

    friend bool operator==(const CosetElement& a, const CosetElement& b);
    friend bool operator!=(const CosetElement& a, const CosetElement& b) { return !(a == b); }

private:
    GradedElement rep_;
    std::shared_ptr<const Lattice> modulus_;
};

enum class PhiMode { Production, Verify };

/// Both evaluations of phi on a kernel element with witnesses.
struct PhiEvaluation {
    GradedElement direct;                  // coefficient of prod [A_I, omega] in degree 2k+1
    std::optional<GradedElement> formula;  // sum <X_I, (omega)_(2k)> + <(A_I)_(2), W> + <W, X_I> X_I
    CosetElement coset;
};

/// phi_{2k-1}(a) for 2k - 1 >= 3. Throws KernelViolation when the bracket sum is nonzero and
/// DepthViolation when a witness is missing, too shallow, or has the wrong coefficient. In verify
/// mode both paths are computed and must agree exactly.
PhiEvaluation phi_eval(const KernelElement& a, int n, PhiMode mode = PhiMode::Verify);

/// (J)_(1): +1 above the diagonal, -1 below.
IntMatrix j_first_coefficient(int n);
/// Symmetric part of (omega)_(2k) recovered from W = (omega)_(2k-1):
///   -1/4 (<(J)_(1), W> + (4k - 2) W).
/// Throws HalfIntegralityViolation if an entry is not in (1/2)Z.
QMatrix reconstruct_plus(const GradedElement& w, int k);
/// u = -1 * reconstruct_plus(W, k), the column sums that the skew part must reproduce.
std::vector<Rational> skew_column_sums(const GradedElement& w, int k);
/// Skew matrix supported on the sub/superdiagonal with column sums u: the entries
/// (i+1, i) = u_1 + ... + u_i and (i, i+1) their negatives.
QMatrix banded_skew(const std::vector<Rational>& u);
/// banded_skew(u) alone; in general half-integral, so not a valid stand-in for (omega)_(2k)^-.
QMatrix w_prime_banded(const GradedElement& w, int k);
/// Skew matrix congruent to the skew part of (omega)_(2k) modulo G_{2k}: the forced
/// fractional parts of -reconstruct_plus on the off-diagonal, plus a banded integer
/// correction giving column sums u.
QMatrix w_prime(const GradedElement& w, int k);
/// phi value computed from the (I_i, W_i) data alone, read in degree target_degree = 2l + 1 >= 5.
CosetElement phi_from_w(const std::vector<KernelTerm>& terms, int n, int target_degree);

}  // namespace burau
