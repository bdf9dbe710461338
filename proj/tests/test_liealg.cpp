#include "burau/burau.hpp"
#include "burau/errors.hpp"
#include "burau/liealg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace burau;

namespace {

GradedElement xdiff(int n, int a, int b, int c, int d, int degree)
{
    return {degree, gen_x(a, b, n).matrix - gen_x(c, d, n).matrix};
}

GradedElement x(int i, int j, int n)
{
    return gen_x(std::min(i, j), std::max(i, j), n);
}

}  // namespace

TEST_SUITE("liealg")
{
    TEST_CASE("generators satisfy the graded conditions")
    {
        for (int n = 3; n <= 6; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    CHECK(gen_x(i, j, n).valid());
                    for (int k = j + 1; k <= n; ++k)
                        CHECK(gen_y(i, j, k, n).valid());
                }
        GradedElement bad{1, gen_y(1, 2, 3, 4).matrix};
        CHECK_FALSE(bad.valid());
        GradedElement nontrace{3, gen_x(1, 2, 4).matrix};
        CHECK(nontrace.violations() == std::vector<std::string>{"trace 0"});
    }

    TEST_CASE("ranks of graded pieces match the constraint dimension")
    {
        for (int n = 3; n <= 7; ++n)
            for (int k = 1; k <= 6; ++k) {
                const int want = oracle::g_dimension(n, k);
                CHECK(g_rank(n, k) == want);
                const auto basis = g_basis(n, k);
                CHECK(static_cast<int>(basis.size()) == want);
                std::vector<std::vector<Rational>> rows;
                for (const auto& b : basis) {
                    CHECK(b.degree == k);
                    CHECK(b.valid());
                    rows.push_back(oracle::flat(b.matrix));
                }
                CHECK(oracle::rank(rows) == want);
            }
    }

    TEST_CASE("graded lattices contain every integral generator pattern")
    {
        const int n = 5;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                CHECK(g_lattice(n, 1).contains(gen_x(a, b, n).matrix));
                for (int c = b + 1; c <= n; ++c) {
                    CHECK(g_lattice(n, 2).contains(gen_y(a, b, c, n).matrix));
                    CHECK(g_lattice(n, 4).contains(gen_y(a, b, c, n).matrix));
                }
                CHECK(g_lattice(n, 3).contains(xdiff(n, a, b, 1, 2, 3).matrix));
            }
        CHECK_FALSE(g_lattice(n, 3).contains(gen_x(1, 2, n).matrix));
    }

    TEST_CASE("bracket formulas hold for every index pattern")
    {
        const int n = 5;
        int checked = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || i == k || j == k)
                        continue;
                    // Y_ijk for arbitrary distinct indices via its definition
                    const IntMatrix y = (unit_matrix(n, i, j) - unit_matrix(n, j, i)) -
                                        (unit_matrix(n, i, k) - unit_matrix(n, k, i)) +
                                        (unit_matrix(n, j, k) - unit_matrix(n, k, j));
                    CHECK(commutator(x(i, j, n).matrix, x(i, k, n).matrix) == y);
                    CHECK(commutator(x(i, j, n).matrix, y) ==
                          (x(i, k, n).matrix - x(j, k, n).matrix).scaled(BigInt(2)));
                    for (int l = 1; l <= n; ++l)
                        if (l != i && l != j && l != k)
                            CHECK(bracket(x(i, j, n), x(k, l, n)).is_zero());
                    CHECK(bracket(x(i, j, n), x(i, j, n)).is_zero());
                    ++checked;
                }
        CHECK(checked == 60);
    }

    TEST_CASE("symmetric group action commutes with the bracket and relabels generators")
    {
        const int n = 4;
        for (const Perm& p : Perm::all(n)) {
            const Perm q = p.inverse();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    CHECK(sn_act(p, gen_x(i, j, n)) == x(q(i), q(j), n));
            const GradedElement a = gen_x(1, 2, n), b = gen_y(1, 3, 4, n);
            CHECK(sn_act(p, bracket(a, b)) == bracket(sn_act(p, a), sn_act(p, b)));
        }
    }

    TEST_CASE("bracket lattices and orbit spans")
    {
        const int n = 5;
        // <G1, G3> has full rank in G4 by elimination, and equals G4 as a lattice
        std::vector<std::vector<Rational>> rows;
        for (const auto& a : g_basis(n, 1))
            for (const auto& b : g_basis(n, 3))
                rows.push_back(oracle::flat(bracket(a, b).matrix));
        CHECK(oracle::rank(rows) == 6);
        CHECK(*bracket_lattice(n, 3) == g_lattice(n, 4));
        for (const auto& b : g_basis(n, 5)) {
            CHECK_FALSE(bracket_lattice(n, 4)->contains(b.matrix));
            CHECK(bracket_lattice(n, 4)->contains(IntMatrix(b.matrix.scaled(BigInt(2)))));
        }
        const auto orbit = sn_orbit(xdiff(n, 2, 4, 1, 3, 3));
        CHECK(orbit.size() == 30);
        std::vector<IntMatrix> ms;
        for (const auto& g : orbit)
            ms.push_back(g.matrix);
        CHECK(Lattice::span(ms).rank() == 9);
        CHECK(Lattice::span(ms) == g_lattice(n, 3));
        CHECK(bracket_lattice(n, 3) == bracket_lattice(n, 3));  // memoized
    }

    TEST_CASE("kernel of the bracket map")
    {
        const int n = 5;
        const auto gens = kernel_generators(n, 3);
        CHECK(gens.size() == static_cast<std::size_t>(10 * 9 - 6));
        for (const auto& k : gens)
            CHECK(k.in_kernel(n));
    }

    TEST_CASE("phi on the standard kernel element")
    {
        const int n = 5;
        const Bindings b = builtin_bindings(n);
        const GradedElement w = xdiff(n, 2, 4, 2, 5, 3);
        CHECK(word_coeff(b.at("W3"), 3) == w);
        KernelElement d{3, {{2, 5, w, b.at("W3")}, {2, 5, w, b.at("W3")}, {4, 5, w, b.at("W3")}}};
        CHECK(d.in_kernel(n));
        const PhiEvaluation p = phi_eval(d, n, PhiMode::Verify);
        REQUIRE(p.formula);
        CHECK(p.direct == *p.formula);
        CHECK(p.coset == CosetElement::of(w.transported(5)));
        CHECK(p.coset == CosetElement::of(word_coeff(b.at("DELTA"), 5)));
        CHECK_FALSE(p.coset.is_zero());
        CHECK(p.coset == phi_from_w(d.terms, n, 5));
        CHECK(phi_from_w(d.terms, n, 7) == p.coset.transported(7));
        const PhiEvaluation fast = phi_eval(d, n, PhiMode::Production);
        CHECK_FALSE(fast.formula);
        CHECK(fast.coset == p.coset);
    }

    TEST_CASE("phi rejects bad input")
    {
        const int n = 5;
        const Bindings b = builtin_bindings(n);
        const GradedElement w = xdiff(n, 2, 4, 2, 5, 3);
        KernelElement not_kernel{3, {{2, 5, w, b.at("W3")}}};
        CHECK_THROWS_AS(phi_eval(not_kernel, n), KernelViolation);
        KernelElement missing{3, {{2, 5, w, {}}, {2, 5, w, {}}, {4, 5, w, {}}}};
        CHECK_THROWS_AS(phi_eval(missing, n), DepthViolation);
        KernelElement wrong{3, {{2, 5, w, b.at("ALPHA")}, {2, 5, w, b.at("ALPHA")}, {4, 5, w, b.at("ALPHA")}}};
        CHECK_THROWS_AS(phi_eval(wrong, n), DepthViolation);
    }

    TEST_CASE("symmetric part reconstruction and the skew correction")
    {
        const int n = 5;
        const Bindings b = builtin_bindings(n);
        const GradedElement w = word_coeff(b.at("W3"), 3);
        const QMatrix plus = reconstruct_plus(w, 2);
        const QMatrix minus = w_prime(w, 2);
        // compare with the actual degree-4 coefficient of the witness
        const IntMatrix omega4 = burau_eval_trunc(b.at("W3"), 5).plane(4);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational sym = (Rational(omega4(i, j)) + Rational(omega4(j, i))) / 2;
                CHECK(plus(i, j) == sym);
                CHECK(minus(i, j) == -minus(j, i));
                CHECK(denominator(plus(i, j)) <= 2);
            }
        // omega4 - plus - minus is an integer skew matrix that annihilates 1 (an element of G4)
        IntMatrix diff(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational r = Rational(omega4(i, j)) - plus(i, j) - minus(i, j);
                REQUIRE(denominator(r) == 1);
                diff(i, j) = numerator(r);
            }
        CHECK(GradedElement(4, diff).valid());
        // the banded matrix reproduces the column sums
        const auto u = skew_column_sums(w, 2);
        const QMatrix band = banded_skew(u);
        for (int j = 0; j < n; ++j) {
            Rational s = 0;
            for (int i = 0; i < n; ++i)
                s += band(i, j);
            CHECK(s == u[static_cast<std::size_t>(j)]);
        }
    }
}
