#include "burau/burau.hpp"
#include "burau/hnf.hpp"
#include "burau/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace burau;

TEST_SUITE("linalg")
{
    TEST_CASE("permutation matrices compose left to right")
    {
        for (const Perm& p : Perm::all(4))
            for (const Perm& q : Perm::all(4)) {
                CHECK(perm_matrix(p.then(q)) == perm_matrix(p) * perm_matrix(q));
                CHECK(as_permutation(perm_matrix(p)) == p);
            }
        CHECK_FALSE(as_permutation(all_ones(3)));
    }

    TEST_CASE("inverse and determinant of Burau images")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + trial % 5;
            const BraidWord w = oracle::random_word(rng, n, 12);
            const LaurentMatrix a = burau_eval(w);
            CHECK(a * inverse(a) == laurent_identity(n));
            CHECK(inverse(a) == burau_eval(w.inverse()));
            // each letter contributes det = -t^sign
            int exp_sum = 0;
            for (const auto& l : w.flatten())
                exp_sum += l.sign;
            const LaurentPoly want = LaurentPoly::monomial(exp_sum % 2 == 0 ? 1 : -1, exp_sum);
            CHECK(determinant(a) == want);
        }
        LaurentMatrix singular = laurent_identity(2);
        singular(0, 0) = LaurentPoly(2);
        CHECK_THROWS_AS(inverse(singular), NonUnitDeterminant);
    }

    TEST_CASE("s-adic expansion reassembles and depth matches the valuation oracle")
    {
        std::mt19937_64 rng(9);
        const BraidWord alpha = parse_word(alpha_text(), 5);
        for (int trial = 0; trial < 30; ++trial) {
            BraidWord w = oracle::random_word(rng, 5, 8);
            // commutators with alpha push the depth up
            if (trial % 2 == 0)
                w = BraidWord::commutator(alpha, w.power(2));
            const LaurentMatrix a = burau_eval(w);
            const int want = oracle::depth(a);
            const Depth d = depth(a);
            if (want < 0)
                CHECK(d.infinite());
            else
                CHECK(d.value == want);
            const auto coeffs = s_expand(a, 6);
            const TruncMatrix t = TruncMatrix::from_laurent(a, 6);
            for (int k = 0; k < 6; ++k)
                CHECK(t.plane(k) == coeffs[static_cast<std::size_t>(k)]);
        }
        // reassembly of a polynomial (in s) matrix is exact
        std::vector<IntMatrix> cs{int_identity(3), unit_matrix(3, 1, 2), unit_matrix(3, 3, 3)};
        CHECK(s_expand(s_reassemble(cs), 3) == cs);
    }

    TEST_CASE("truncated inverse and depth semantics")
    {
        const BraidWord w = parse_word("s1 s2^-1 s3 s1", 4);
        const TruncMatrix a = burau_eval_trunc(w, 5);
        CHECK(a * a.inverse() == TruncMatrix::identity(4, 5));
        CHECK(a.inverse() == burau_eval_trunc(w.inverse(), 5));
        CHECK(TruncMatrix::identity(4, 5).depth() == Depth{5, true});
        CHECK(depth(laurent_identity(3)).infinite());
        CHECK(a.truncated(2) == burau_eval_trunc(w, 2));
    }
}

TEST_SUITE("hnf")
{
    TEST_CASE("hermite form is canonical and transform is unimodular")
    {
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<int> e(-5, 5);
        for (int trial = 0; trial < 60; ++trial) {
            const int rows = 2 + trial % 5, dim = 3 + trial % 3;
            std::vector<IntVector> g(rows, IntVector(dim));
            for (auto& r : g)
                for (auto& x : r)
                    x = e(rng);
            const HermiteForm h = hermite_form(g, dim, true);
            // H = U G
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < dim; ++j) {
                    BigInt s = 0;
                    for (int k = 0; k < rows; ++k)
                        s += h.u[i][k] * g[k][j];
                    CHECK(s == h.h[i][j]);
                }
            // rank agrees with rational elimination
            std::vector<std::vector<Rational>> q;
            for (const auto& r : g) {
                std::vector<Rational> v(r.begin(), r.end());
                q.push_back(v);
            }
            CHECK(h.rank == oracle::rank(q));
            // pivots positive, entries above reduced
            for (int i = 0; i < h.rank; ++i) {
                const int c = h.pivot_cols[i];
                CHECK(h.h[i][c] > 0);
                for (int k = 0; k < i; ++k) {
                    CHECK(h.h[k][c] >= 0);
                    CHECK(h.h[k][c] < h.h[i][c]);
                }
            }
            // permuting generators gives the same lattice
            std::vector<IntVector> rev(g.rbegin(), g.rend());
            CHECK(Lattice::span(g, dim) == Lattice::span(rev, dim));
        }
    }

    TEST_CASE("membership, solving and kernel")
    {
        const std::vector<IntMatrix> gens{int_identity(2).scaled(BigInt(2)), unit_matrix(2, 1, 2)};
        IntMatrix target = int_identity(2).scaled(BigInt(4));
        target(0, 1) = 3;
        const auto c = hnf_solve(gens, target);
        REQUIRE(c);
        CHECK((*c)[0] == 2);
        CHECK((*c)[1] == 3);
        CHECK_FALSE(hnf_lattice_membership(gens, int_identity(2)));
        const std::vector<IntMatrix> dependent{unit_matrix(2, 1, 1), unit_matrix(2, 1, 1).scaled(BigInt(3)),
                                               unit_matrix(2, 2, 2)};
        const auto ker = hnf_kernel(dependent);
        REQUIRE(ker.size() == 1);
        CHECK(ker[0][0] * 1 + ker[0][1] * 3 == 0);
        CHECK(ker[0][2] == 0);
    }

    TEST_CASE("lattice containment and index")
    {
        const Lattice a = Lattice::span(std::vector<IntVector>{{2, 0}, {0, 3}}, 2);
        const Lattice b = Lattice::span(std::vector<IntVector>{{1, 0}, {0, 1}}, 2);
        CHECK(b.contains(a));
        CHECK_FALSE(a.contains(b));
        CHECK(a.pivot_product() == 6);
        CHECK(a.with({1, 0}).with({0, 1}) == b);
        CHECK(a.coordinates({4, 9}) == std::optional<IntVector>({2, 3}));
    }
}
