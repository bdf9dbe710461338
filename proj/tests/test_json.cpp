#include "burau/burau.hpp"
#include "burau/json_io.hpp"
#include "burau/liealg.hpp"

#include <doctest.h>

using namespace burau;
using io::json;

TEST_SUITE("json")
{
    TEST_CASE("laurent polynomials and matrices round trip")
    {
        const LaurentMatrix a = burau_eval(parse_word("[s1, s2^3] s3^-1", 4));
        const json j = io::to_json(a);
        CHECK(j["n"] == 4);
        CHECK(io::laurent_matrix_from_json(j) == a);
        CHECK(io::laurent_matrix_from_json(json::parse(j.dump())) == a);
        const LaurentPoly p = LaurentPoly::from_terms({{-2, 3}, {5, -1}});
        CHECK(io::to_json(p) == json::parse(R"({"t":{"-2":"3","5":"-1"}})"));
    }

    TEST_CASE("big integers switch to strings outside int64")
    {
        const BigInt big = BigInt(1) << 80;
        CHECK(io::to_json(BigInt(42)).is_number());
        CHECK(io::to_json(big).is_string());
        CHECK(io::bigint_from_json(io::to_json(big)) == big);
        CHECK(io::bigint_from_json(io::to_json(-big)) == -big);
        CHECK_THROWS(io::bigint_from_json(json("12x")));
    }

    TEST_CASE("truncated matrices store per-entry s-coefficient lists")
    {
        const TruncMatrix t = burau_eval_trunc(parse_word("s1 s2", 3), 3);
        const json j = io::to_json(t);
        CHECK(j["precision"] == 3);
        CHECK(j["entries"][0][0].size() == 3);
        CHECK(io::trunc_matrix_from_json(j) == t);
    }

    TEST_CASE("graded elements and words")
    {
        const GradedElement g{3, gen_x(2, 4, 5).matrix - gen_x(1, 3, 5).matrix};
        CHECK(io::graded_from_json(io::to_json(g)) == g);
        const BraidWord w = builtin_bindings(5).at("DELTA");
        const json j = io::word_to_json(w);
        CHECK(io::word_from_json(j, 5).flatten() == w.flatten());
    }

    TEST_CASE("malformed input is rejected")
    {
        CHECK_THROWS(io::laurent_matrix_from_json(json::parse(R"({"n":2,"entries":[[{"t":{}}]]})")));
        CHECK_THROWS(io::laurent_matrix_from_json(json::parse(R"({"entries":[]})")));
        CHECK_THROWS(io::graded_from_json(json::parse(R"({"degree":1})")));
        CHECK_THROWS(io::laurent_from_json(json::parse(R"({"t":{"a":"1"}})")));
    }
}
