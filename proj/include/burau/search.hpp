#pragma once

#include "burau/braid.hpp"
#include "burau/graded.hpp"
#include "burau/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burau {

struct SearchConfig {
    int n = 5;
    int target_depth = 3;
    std::vector<BraidWord> pool;
    int min_nesting = 0;
    int max_nesting = 1;
    int max_product = 1;
    int precision = 4;  // must exceed target_depth
    std::size_t result_cap = 1000;
    std::uint64_t candidate_budget = 1000000;
    /// Hits whose expanded word is at most this long are re-checked on the exact path.
    std::uint64_t exact_check_cap = 0;

    /// Throws DimensionMismatch on an inconsistent configuration.
    void validate() const;
    /// Fields as above; "pool" is a list of word strings parsed with `bindings` plus optional "lets".
    static SearchConfig from_json(const io::json& j, const Bindings& bindings = {});
};

struct SearchHit {
    std::uint64_t index = 0;  // position in the enumeration order
    BraidWord word;
    int depth = 0;
    GradedElement coefficient;
    bool exact_checked = false;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    std::uint64_t candidates = 0;   // candidates evaluated
    std::uint64_t saturated = 0;    // candidates equal to I at the full precision (skipped)
    std::uint64_t duplicates = 0;   // hits dropped by orbit deduplication
    bool budget_exhausted = false;  // enumeration stopped at candidate_budget
};

/// Lexicographically least vectorization of P (+-M) P^-1 over S_n and both signs.
std::vector<BigInt> orbit_key(const GradedElement& m);

/// Enumerates products of 1..max_product factors, each an iterated commutator of pool words with
/// nesting in [min_nesting, max_nesting] (no [x, x]), breadth-first by product length and then
/// lexicographically by factor index. Returns the first hit per +-S_n orbit of the leading
/// coefficient, in enumeration order. Output does not depend on the thread count.
SearchResult search_deep(const SearchConfig& cfg);

/// Factor words in their enumeration order.
std::vector<BraidWord> search_factors(const SearchConfig& cfg);

}  // namespace burau
