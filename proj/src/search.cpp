#include "burau/search.hpp"

#include "burau/burau.hpp"
#include "burau/errors.hpp"
#include "burau/liealg.hpp"
#include "burau/parallel.hpp"
#include "burau/small_trunc.hpp"

#include <algorithm>
#include <set>

namespace burau {

void SearchConfig::validate() const
{
    auto fail = [](const std::string& m) { throw DimensionMismatch("search config: " + m); };
    if (n < 2)
        fail("n must be at least 2");
    if (target_depth < 1)
        fail("target_depth must be positive");
    if (precision <= target_depth)
        fail("precision must exceed target_depth");
    if (pool.empty())
        fail("empty pool");
    for (const auto& w : pool)
        if (w.strands() != n)
            fail("pool word on the wrong number of strands");
    if (min_nesting < 0 || max_nesting < min_nesting)
        fail("need 0 <= min_nesting <= max_nesting");
    if (max_product < 1)
        fail("max_product must be positive");
}

SearchConfig SearchConfig::from_json(const io::json& j, const Bindings& bindings)
{
    SearchConfig c;
    Bindings b = bindings;
    c.n = j.value("n", c.n);
    if (j.contains("lets"))
        for (const auto& [name, text] : j["lets"].items())
            b[name] = parse_word(text.get<std::string>(), c.n, b).named(name);
    c.target_depth = j.value("target_depth", c.target_depth);
    c.min_nesting = j.value("min_nesting", c.min_nesting);
    c.max_nesting = j.value("max_nesting", c.max_nesting);
    c.max_product = j.value("max_product", c.max_product);
    c.precision = j.value("precision", c.target_depth + 1);
    c.result_cap = j.value("result_cap", c.result_cap);
    c.candidate_budget = j.value("candidate_budget", c.candidate_budget);
    c.exact_check_cap = j.value("exact_check_cap", c.exact_check_cap);
    if (!j.contains("pool") || !j["pool"].is_array())
        throw Error("search config needs a \"pool\" array of words");
    for (const auto& p : j["pool"])
        c.pool.push_back(parse_word(p.get<std::string>(), c.n, b));
    c.validate();
    return c;
}

std::vector<BigInt> orbit_key(const GradedElement& m)
{
    std::vector<BigInt> best;
    for (const Perm& p : Perm::all(m.n())) {
        const GradedElement g = sn_act(p, m);
        for (int sign : {1, -1}) {
            std::vector<BigInt> v = vectorize(sign > 0 ? g.matrix : IntMatrix(-g.matrix));
            if (best.empty() || v < best)
                best = std::move(v);
        }
    }
    return best;
}

std::vector<BraidWord> search_factors(const SearchConfig& cfg)
{
    cfg.validate();
    // levels[d]: factors of nesting exactly d.
    std::vector<std::vector<BraidWord>> levels{cfg.pool};
    for (int d = 1; d <= cfg.max_nesting; ++d) {
        std::vector<BraidWord> all;
        for (int e = 0; e < d; ++e)
            all.insert(all.end(), levels[static_cast<std::size_t>(e)].begin(),
                       levels[static_cast<std::size_t>(e)].end());
        const std::size_t fresh_from = all.size() - levels[static_cast<std::size_t>(d - 1)].size();
        std::vector<BraidWord> next;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b)
                if (a != b && (a >= fresh_from || b >= fresh_from))
                    next.push_back(BraidWord::commutator(all[a], all[b]));
        levels.push_back(std::move(next));
    }
    std::vector<BraidWord> out;
    for (int d = cfg.min_nesting; d <= cfg.max_nesting; ++d)
        out.insert(out.end(), levels[static_cast<std::size_t>(d)].begin(), levels[static_cast<std::size_t>(d)].end());
    return out;
}

namespace {

// Truncated matrix in the int64 layout when it fits, else in bignum form.
struct Value {
    std::optional<SmallTrunc> small;
    TruncMatrix big;

    static Value of(TruncMatrix m)
    {
        Value v;
        v.small = SmallTrunc::from_big(m);
        if (!v.small)
            v.big = std::move(m);
        return v;
    }
    TruncMatrix as_big() const { return small ? small->to_big() : big; }
    Depth depth() const { return small ? small->depth() : big.depth(); }
    IntMatrix plane(int d) const { return small ? small->to_big().plane(d) : big.plane(d); }
};

Value multiply(const Value& a, const Value& b)
{
    if (a.small && b.small) {
        try {
            Value v;
            v.small = *a.small * *b.small;
            return v;
        } catch (const FixedWidthOverflow&) {
        }
    }
    return Value::of(a.as_big() * b.as_big());
}

struct RawHit {
    std::uint64_t index;
    std::vector<std::uint32_t> factors;
    int depth;
    IntMatrix coefficient;
};

struct Subtree {
    int length;
    std::uint32_t first;
    std::uint64_t start;  // enumeration index of its first candidate
    std::uint64_t count;  // candidates to visit (already cut by the budget)
    std::vector<RawHit> hits;
    std::uint64_t saturated = 0;
};

}  // namespace

SearchResult search_deep(const SearchConfig& cfg)
{
    cfg.validate();
    const std::vector<BraidWord> factors = search_factors(cfg);
    const std::uint64_t f = factors.size();
    std::vector<Value> values(factors.size());
    parallel_for(factors.size(), [&](std::size_t i) { values[i] = Value::of(burau_eval_trunc(factors[i], cfg.precision)); });

    // Split the enumeration into subtrees keyed by (length, first factor), numbered in order.
    SearchResult result;
    std::vector<Subtree> subtrees;
    std::uint64_t position = 0;
    for (int len = 1; len <= cfg.max_product && position < cfg.candidate_budget; ++len) {
        std::uint64_t per_first = 1;
        for (int q = 1; q < len; ++q)
            per_first = per_first > cfg.candidate_budget ? per_first : per_first * f;
        for (std::uint32_t first = 0; first < f && position < cfg.candidate_budget; ++first) {
            const std::uint64_t count = std::min(per_first, cfg.candidate_budget - position);
            subtrees.push_back({len, first, position, count, {}, 0});
            position += count;
        }
    }
    result.candidates = position;
    {
        // The enumeration was cut short when the full space is larger than what was visited.
        long double total = 0, power = 1;
        for (int len = 1; len <= cfg.max_product; ++len) {
            power *= static_cast<long double>(f);
            total += power;
        }
        result.budget_exhausted = total > static_cast<long double>(position);
    }

    parallel_for(subtrees.size(), [&](std::size_t s) {
        Subtree& t = subtrees[s];
        std::vector<std::uint32_t> idx(static_cast<std::size_t>(t.length), 0);
        idx[0] = t.first;
        std::vector<Value> prefix(static_cast<std::size_t>(t.length));
        prefix[0] = values[t.first];
        int valid = 1;  // prefix[0..valid) matches idx
        for (std::uint64_t c = 0; c < t.count; ++c) {
            for (int q = valid; q < t.length; ++q)
                prefix[static_cast<std::size_t>(q)] =
                    multiply(prefix[static_cast<std::size_t>(q - 1)], values[idx[static_cast<std::size_t>(q)]]);
            const Value& v = prefix.back();
            const Depth d = v.depth();
            if (d.lower_bound)
                ++t.saturated;
            else if (d.value >= cfg.target_depth)
                t.hits.push_back({t.start + c, idx, d.value, v.plane(d.value)});
            // Advance the odometer over positions 1..length-1.
            int q = t.length - 1;
            while (q >= 1 && ++idx[static_cast<std::size_t>(q)] == f) {
                idx[static_cast<std::size_t>(q)] = 0;
                --q;
            }
            valid = std::max(q, 1);
        }
    });

    std::set<std::vector<BigInt>> seen;
    for (const auto& t : subtrees) {
        result.saturated += t.saturated;
        for (const auto& h : t.hits) {
            if (result.hits.size() >= cfg.result_cap)
                break;
            GradedElement coeff{h.depth, h.coefficient};
            if (!seen.insert(orbit_key(coeff)).second) {
                ++result.duplicates;
                continue;
            }
            std::vector<BraidWord> ws;
            for (auto i : h.factors)
                ws.push_back(factors[i]);
            result.hits.push_back({h.index, BraidWord::product(cfg.n, ws), h.depth, coeff, false});
        }
    }

    // Re-evaluate every reported hit from its word.
    parallel_for(result.hits.size(), [&](std::size_t i) {
        SearchHit& h = result.hits[i];
        const TruncMatrix m = burau_eval_trunc(h.word, h.depth + 1);
        const Depth d = m.depth();
        if (d.lower_bound || d.value != h.depth || m.plane(h.depth) != h.coefficient.matrix)
            throw Error("search hit " + std::to_string(h.index) + " failed re-evaluation");
        if (cfg.exact_check_cap > 0 && h.word.expanded_length() <= cfg.exact_check_cap) {
            const Depth exact = depth(burau_eval(h.word));
            if (exact.value != h.depth)
                throw Error("search hit " + std::to_string(h.index) + " has exact depth " + exact.to_string());
            h.exact_checked = true;
        }
    });
    return result;
}

}  // namespace burau
