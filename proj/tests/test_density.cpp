#include "burau/burau.hpp"
#include "burau/density.hpp"
#include "burau/errors.hpp"
#include "burau/liealg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace burau;

namespace {

const WitnessLibrary& library5()
{
    static const WitnessLibrary lib = WitnessLibrary::build(5, 5);
    return lib;
}

}  // namespace

TEST_SUITE("density")
{
    TEST_CASE("library witnesses span each graded piece")
    {
        const WitnessLibrary& lib = library5();
        for (int k = 1; k <= 5; ++k) {
            std::vector<IntMatrix> images;
            for (const auto& w : lib.degree(k)) {
                CHECK(w.image.degree == k);
                CHECK(w.image.valid());
                images.push_back(w.image.matrix);
            }
            CHECK(Lattice::span(images) == g_lattice(5, k));
        }
        CHECK(lib.verify().empty());
        CHECK_THROWS(lib.degree(6));
    }

    TEST_CASE("designated odd witnesses carry X24 - X25")
    {
        const WitnessLibrary& lib = library5();
        for (int k : {3, 5}) {
            REQUIRE(lib.designated(k));
            const GradedElement want{k, gen_x(2, 4, 5).matrix - gen_x(2, 5, 5).matrix};
            CHECK(lib.designated(k)->image == want);
            CHECK(word_coeff(lib.designated(k)->word, k) == want);
        }
    }

    TEST_CASE("solve produces a word with the requested coefficient")
    {
        const WitnessLibrary& lib = library5();
        for (int k = 1; k <= 4; ++k)
            for (const auto& b : g_basis(5, k)) {
                const GradedElement t{k, b.matrix.scaled(BigInt(-2)) + lib.degree(k).front().image.matrix};
                CHECK(word_coeff(lib.solve(t), k) == t);
            }
        CHECK_THROWS_AS(lib.solve(GradedElement(3, gen_x(1, 2, 5).matrix)), NoSolution);
    }

    TEST_CASE("json round trip with and without re-verification")
    {
        const WitnessLibrary& lib = library5();
        const io::json j = lib.to_json();
        const WitnessLibrary again = WitnessLibrary::from_json(j);
        CHECK(again.to_json() == j);
        CHECK(WitnessLibrary::from_json(j, true).max_degree() == 5);
        io::json broken = j;
        broken["degrees"][1]["witnesses"][0]["element"]["matrix"][0][0] = 7;
        CHECK_THROWS(WitnessLibrary::from_json(broken));
    }

    TEST_CASE("approximation reaches the requested depth")
    {
        const WitnessLibrary& lib = library5();
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 6; ++trial) {
            const BraidWord w = oracle::random_word(rng, 5, 12);
            const GammaElement g = GammaElement::checked(burau_eval(w));
            const int K = 2 + trial % 3;
            const ApproximationResult r = approximate(g, K, lib);
            CHECK(r.achieved_depth.at_least(K + 1));
            const TruncMatrix residual =
                TruncMatrix::from_laurent(burau_eval(w), K + 1).inverse() * burau_eval_trunc(r.word, K + 1);
            CHECK(residual.depth().at_least(K + 1));
            CHECK(word_permutation(r.word) == word_permutation(w));
            CHECK(static_cast<int>(r.steps.size()) == K + 1);
        }
    }

    TEST_CASE("exact recheck of a short approximation")
    {
        const BraidWord w = parse_word("s1 s2 s3^-1 s4", 5);
        ApproximateOptions opts;
        opts.exact_recheck = true;
        const ApproximationResult r = approximate(GammaElement::of_word(w), 2, library5(), opts);
        REQUIRE(r.exact_depth);
        CHECK(r.exact_depth->at_least(3));
        CHECK(oracle::depth(inverse(burau_eval(w)) * burau_eval(r.word)) != 0);
    }

    TEST_CASE("approximation rejects degrees beyond the library")
    {
        CHECK_THROWS(approximate(GammaElement::of_word(parse_word("s1", 5)), 7, library5()));
    }
}
