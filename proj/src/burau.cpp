#include "burau/burau.hpp"

#include "burau/errors.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace burau {

LaurentMatrix burau_gen(int n, int i, int sign)
{
    if (i < 1 || i > n - 1)
        throw IndexOutOfRange("burau_gen: index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
    LaurentMatrix m = laurent_identity(n);
    const int a = i - 1, b = i;
    if (sign > 0) {
        m(a, a) = LaurentPoly(1) - LaurentPoly::t();
        m(a, b) = 1;
        m(b, a) = LaurentPoly::t();
        m(b, b) = 0;
    } else {
        m(a, a) = 0;
        m(a, b) = LaurentPoly::t_inv();
        m(b, a) = 1;
        m(b, b) = LaurentPoly(1) - LaurentPoly::t_inv();
    }
    return m;
}

TruncMatrix burau_gen_trunc(int n, int i, int sign, int precision)
{
    return TruncMatrix::from_laurent(burau_gen(n, i, sign), precision);
}

namespace {

// Evaluates a word DAG over a multiplicative backend. Inverses are taken
// structurally (reversed order, inverted letters), so only generator inverses are needed.
template <class M>
class Evaluator {
public:
    Evaluator(int n, std::function<M(int, int)> gen, M one) : n_(n), gen_(std::move(gen)), one_(std::move(one)) {}

    M eval(const BraidWord& w)
    {
        return w.is_empty() ? one_ : eval(w.root().get(), false);
    }

private:
    const M& generator(const Letter& l)
    {
        const int key = l.sign > 0 ? l.gen : -l.gen;
        auto it = gens_.find(key);
        if (it == gens_.end())
            it = gens_.emplace(key, gen_(l.gen, l.sign)).first;
        return it->second;
    }

    M power(const M& base, long long e)
    {
        M r = one_;
        M b = base;
        bool first = true;
        while (e > 0) {
            if (e & 1) {
                r = first ? b : r * b;
                first = false;
            }
            e >>= 1;
            if (e > 0)
                b = b * b;
        }
        return r;
    }

    M eval(const WordNode* node, bool inv)
    {
        const auto key = std::make_pair(node, inv);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        M r = one_;
        switch (node->kind) {
        case WordNode::Kind::Literal: {
            bool first = true;
            auto mul = [&](const Letter& l) {
                r = first ? generator(l) : r * generator(l);
                first = false;
            };
            if (!inv)
                for (const auto& l : node->letters)
                    mul(l);
            else
                for (auto it = node->letters.rbegin(); it != node->letters.rend(); ++it)
                    mul(it->inverse());
            break;
        }
        case WordNode::Kind::PureGen:
        case WordNode::Kind::Named:
            if (!node->children.empty())
                r = eval(node->children[0].get(), inv);
            break;
        case WordNode::Kind::Concat: {
            const auto& ch = node->children;
            bool first = true;
            for (std::size_t k = 0; k < ch.size(); ++k) {
                const WordNode* c = inv ? ch[ch.size() - 1 - k].get() : ch[k].get();
                r = first ? eval(c, inv) : r * eval(c, inv);
                first = false;
            }
            break;
        }
        case WordNode::Kind::Inverse:
            r = eval(node->children[0].get(), !inv);
            break;
        case WordNode::Kind::Power: {
            const long long e = node->exponent;
            r = power(eval(node->children[0].get(), inv != (e < 0)), e < 0 ? -e : e);
            break;
        }
        case WordNode::Kind::Commutator: {
            const WordNode* a = node->children[0].get();
            const WordNode* b = node->children[1].get();
            if (!inv)
                r = eval(a, false) * eval(b, false) * eval(a, true) * eval(b, true);
            else
                r = eval(b, false) * eval(a, false) * eval(b, true) * eval(a, true);
            break;
        }
        }
        memo_.emplace(key, r);
        return r;
    }

    int n_;
    std::function<M(int, int)> gen_;
    M one_;
    std::map<int, M> gens_;
    std::map<std::pair<const WordNode*, bool>, M> memo_;
};

}  // namespace

LaurentMatrix burau_eval(const BraidWord& w)
{
    const int n = w.strands();
    Evaluator<LaurentMatrix> ev(n, [n](int i, int sign) { return burau_gen(n, i, sign); }, laurent_identity(n));
    return ev.eval(w);
}

std::optional<SmallTrunc> burau_eval_small(const BraidWord& w, int precision)
{
    const int n = w.strands();
    Evaluator<SmallTrunc> ev(
        n,
        [n, precision](int i, int sign) { return *SmallTrunc::from_big(burau_gen_trunc(n, i, sign, precision)); },
        SmallTrunc::identity(n, precision));
    try {
        return ev.eval(w);
    } catch (const FixedWidthOverflow&) {
        return std::nullopt;
    }
}

TruncMatrix burau_eval_trunc(const BraidWord& w, int precision)
{
    if (precision < 1)
        throw Error("burau_eval_trunc: precision must be positive");
    if (auto small = burau_eval_small(w, precision))
        return small->to_big();
    const int n = w.strands();
    Evaluator<TruncMatrix> ev(
        n, [n, precision](int i, int sign) { return burau_gen_trunc(n, i, sign, precision); },
        TruncMatrix::identity(n, precision));
    return ev.eval(w);
}

LaurentMatrix vector_v(int n)
{
    LaurentMatrix v(n, 1);
    for (int i = 0; i < n; ++i)
        v(i, 0) = LaurentPoly::monomial(1, i + 1);
    return v;
}

LaurentMatrix vector_ones(int n)
{
    LaurentMatrix o(1, n);
    for (int j = 0; j < n; ++j)
        o(0, j) = 1;
    return o;
}

LaurentMatrix form_j(int n)
{
    LaurentMatrix j(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            j(a, b) = a == b ? LaurentPoly(1) : a > b ? -LaurentPoly::t() : -LaurentPoly::t_inv();
    return j;
}

GammaReport gamma_report(const LaurentMatrix& a)
{
    GammaReport r;
    if (!a.is_square() || a.rows() < 1) {
        r.violations.emplace_back(kViolationShape);
        return r;
    }
    const int n = a.rows();
    if (a * vector_v(n) != vector_v(n))
        r.violations.emplace_back(kViolationFixesV);
    if (vector_ones(n) * a != vector_ones(n))
        r.violations.emplace_back(kViolationOnes);
    if (star(a) * form_j(n) * a != form_j(n))
        r.violations.emplace_back(kViolationUnitary);
    if (!as_permutation(reduce_at_one(a)))
        r.violations.emplace_back(kViolationPermutation);
    return r;
}

struct GammaElement::Cache {
    LaurentMatrix matrix;
    std::once_flag depth_once;
    Depth depth;
    std::mutex coeff_mutex;
    std::vector<IntMatrix> coeffs;
};

GammaElement GammaElement::checked(LaurentMatrix a, std::optional<BraidWord> word)
{
    const GammaReport r = gamma_report(a);
    if (!r.ok()) {
        std::string msg = "matrix is not in Gamma:";
        for (const auto& v : r.violations)
            msg += " [" + v + "]";
        throw NotInGamma(msg);
    }
    auto cache = std::make_shared<Cache>();
    cache->matrix = std::move(a);
    return GammaElement(std::move(cache), std::move(word));
}

const LaurentMatrix& GammaElement::matrix() const { return cache_->matrix; }

Depth GammaElement::depth() const
{
    std::call_once(cache_->depth_once, [this] { cache_->depth = burau::depth(cache_->matrix); });
    return cache_->depth;
}

const IntMatrix& GammaElement::coefficient(int k) const
{
    std::lock_guard<std::mutex> lock(cache_->coeff_mutex);
    if (static_cast<int>(cache_->coeffs.size()) <= k)
        cache_->coeffs = s_expand(cache_->matrix, k + 1);
    return cache_->coeffs[static_cast<std::size_t>(k)];
}

GradedElement gamma_coeff(const GammaElement& a, int k)
{
    if (k < 1)
        throw DepthTooSmall("coefficient degree must be >= 1");
    const Depth d = a.depth();
    if (!d.at_least(k))
        throw DepthTooSmall("depth " + d.to_string() + " is below " + std::to_string(k));
    return {k, a.coefficient(k)};
}

GradedElement trunc_coeff(const TruncMatrix& a, int k)
{
    if (k < 1 || a.precision() <= k)
        throw DepthTooSmall("truncated matrix of precision " + std::to_string(a.precision()) +
                            " has no degree-" + std::to_string(k) + " coefficient");
    const Depth d = a.depth();
    if (!d.at_least(k))
        throw DepthTooSmall("depth " + d.to_string() + " is below " + std::to_string(k));
    return {k, a.plane(k)};
}

GradedElement word_coeff(const BraidWord& w, int k)
{
    return trunc_coeff(burau_eval_trunc(w, k + 1), k);
}

}  // namespace burau
