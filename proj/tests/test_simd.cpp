#include "burau/burau.hpp"
#include "burau/kernels.hpp"
#include "burau/small_trunc.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace burau;

namespace {

SmallTrunc random_small(std::mt19937_64& rng, int n, int precision, std::int64_t bound)
{
    std::uniform_int_distribution<std::int64_t> e(-bound, bound);
    SmallTrunc m(n, precision);
    for (int d = 0; d < precision; ++d)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(d, i, j) = e(rng);
    return m;
}

std::vector<kernels::Isa> available()
{
    std::vector<kernels::Isa> v{kernels::Isa::Scalar};
    if (kernels::isa_available(kernels::Isa::Avx2))
        v.push_back(kernels::Isa::Avx2);
    return v;
}

}  // namespace

TEST_SUITE("simd")
{
    TEST_CASE("every available kernel matches the bignum product")
    {
        const kernels::Isa saved = kernels::active_isa();
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + trial % 11, precision = 1 + trial % 7;
            const std::int64_t bound = trial % 2 ? 1000 : 1 << 20;
            const SmallTrunc a = random_small(rng, n, precision, bound);
            const SmallTrunc b = random_small(rng, n, precision, bound);
            const TruncMatrix want = a.to_big() * b.to_big();
            for (const auto isa : available()) {
                kernels::set_active_isa(isa);
                CHECK((a * b).to_big() == want);
                CHECK(a.max_abs() == to_i64(a.to_big().max_abs()));
            }
        }
        kernels::set_active_isa(saved);
    }

    TEST_CASE("padding columns stay zero")
    {
        std::mt19937_64 rng(43);
        for (const auto isa : available()) {
            kernels::set_active_isa(isa);
            const SmallTrunc c = random_small(rng, 5, 4, 100) * random_small(rng, 5, 4, 100);
            for (int d = 0; d < 4; ++d)
                for (int i = 0; i < 5; ++i)
                    for (int j = 5; j < c.stride(); ++j)
                        CHECK(c.data()[(d * 5 + i) * c.stride() + j] == 0);
        }
        kernels::set_active_isa(kernels::detect_isa());
    }

    TEST_CASE("overflow is detected rather than wrapped")
    {
        SmallTrunc a = SmallTrunc::identity(3, 2);
        a.at(1, 0, 1) = std::int64_t(1) << 40;
        CHECK_THROWS_AS(a * a, FixedWidthOverflow);
        CHECK_FALSE(kernels::product_fits(std::int64_t(1) << 31, 1, 2, 2));
        CHECK(kernels::product_fits(1000, 1000, 10, 10));
    }

    TEST_CASE("word evaluation is identical under each ISA")
    {
        std::mt19937_64 rng(47);
        std::vector<BraidWord> words;
        for (int k = 0; k < 20; ++k)
            words.push_back(oracle::random_word(rng, 6, 30));
        for (const auto isa : available()) {
            kernels::set_active_isa(isa);
            for (const auto& w : words)
                CHECK(burau_eval_trunc(w, 6) == TruncMatrix::from_laurent(burau_eval(w), 6));
        }
        kernels::set_active_isa(kernels::detect_isa());
    }

    TEST_CASE("isa names")
    {
        CHECK(kernels::isa_name(kernels::Isa::Scalar) == "scalar");
        CHECK(kernels::isa_name(kernels::Isa::Avx2) == "avx2");
    }
}
