#include "burau/braid.hpp"

#include "burau/errors.hpp"

#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace burau {

namespace {

std::shared_ptr<WordNode> make_node(WordNode::Kind kind)
{
    auto node = std::make_shared<WordNode>();
    node->kind = kind;
    return node;
}

std::string index_text(int i)
{
    return i < 10 ? std::to_string(i) : "(" + std::to_string(i) + ")";
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n)
{
    if (n < 1)
        throw IndexOutOfRange("BraidWord: strand count must be positive");
}

BraidWord BraidWord::generator(int n, int i, int sign)
{
    return literal(n, {Letter{i, sign}});
}

BraidWord BraidWord::literal(int n, std::vector<Letter> letters)
{
    for (const auto& l : letters) {
        if (l.gen < 1 || l.gen > n - 1)
            throw IndexOutOfRange("generator s" + std::to_string(l.gen) + " out of range for n = " + std::to_string(n));
        if (l.sign != 1 && l.sign != -1)
            throw Error("generator exponent must be +-1");
    }
    if (letters.empty())
        return BraidWord(n);
    auto node = make_node(WordNode::Kind::Literal);
    node->letters = std::move(letters);
    return BraidWord(n, node);
}

void BraidWord::require_same_strands(const BraidWord& other) const
{
    if (n_ != other.n_)
        throw StrandMismatch("braid words on " + std::to_string(n_) + " and " + std::to_string(other.n_) +
                             " strands");
}

BraidWord BraidWord::operator*(const BraidWord& other) const
{
    require_same_strands(other);
    if (is_empty())
        return other;
    if (other.is_empty())
        return *this;
    auto node = make_node(WordNode::Kind::Concat);
    node->children = {root_, other.root_};
    return BraidWord(n_, node);
}

BraidWord BraidWord::product(int n, const std::vector<BraidWord>& factors)
{
    auto node = make_node(WordNode::Kind::Concat);
    for (const auto& f : factors) {
        if (f.n_ != n)
            throw StrandMismatch("BraidWord::product: strand mismatch");
        if (!f.is_empty())
            node->children.push_back(f.root_);
    }
    if (node->children.empty())
        return BraidWord(n);
    if (node->children.size() == 1)
        return BraidWord(n, node->children[0]);
    return BraidWord(n, node);
}

BraidWord BraidWord::inverse() const
{
    if (is_empty())
        return *this;
    if (root_->kind == WordNode::Kind::Inverse)
        return BraidWord(n_, root_->children[0]);
    if (root_->kind == WordNode::Kind::Literal && root_->letters.size() == 1)
        return literal(n_, {root_->letters[0].inverse()});
    auto node = make_node(WordNode::Kind::Inverse);
    node->children = {root_};
    return BraidWord(n_, node);
}

BraidWord BraidWord::power(long long e) const
{
    if (e == 0 || is_empty())
        return BraidWord(n_);
    if (e == 1)
        return *this;
    if (e == -1)
        return inverse();
    auto node = make_node(WordNode::Kind::Power);
    node->children = {root_};
    node->exponent = e;
    return BraidWord(n_, node);
}

BraidWord BraidWord::commutator(const BraidWord& a, const BraidWord& b)
{
    a.require_same_strands(b);
    if (a.is_empty() || b.is_empty())
        return BraidWord(a.n_);
    auto node = make_node(WordNode::Kind::Commutator);
    node->children = {a.root_, b.root_};
    return BraidWord(a.n_, node);
}

BraidWord BraidWord::conjugated_by(const BraidWord& u) const
{
    require_same_strands(u);
    if (u.is_empty() || is_empty())
        return *this;
    return product(n_, {u, *this, u.inverse()});
}

BraidWord BraidWord::named(std::string name) const
{
    auto node = make_node(WordNode::Kind::Named);
    node->name = std::move(name);
    if (root_)
        node->children = {root_};
    return BraidWord(n_, node);
}

std::uint64_t BraidWord::expanded_length() const
{
    std::unordered_map<const WordNode*, std::uint64_t> memo;
    std::function<std::uint64_t(const WordNode*)> len = [&](const WordNode* node) -> std::uint64_t {
        if (auto it = memo.find(node); it != memo.end())
            return it->second;
        std::uint64_t r = 0;
        switch (node->kind) {
        case WordNode::Kind::Literal:
            r = node->letters.size();
            break;
        case WordNode::Kind::PureGen:
        case WordNode::Kind::Named:
        case WordNode::Kind::Inverse:
        case WordNode::Kind::Concat:
            for (const auto& c : node->children)
                r = sat_add(r, len(c.get()));
            break;
        case WordNode::Kind::Power:
            r = sat_mul(len(node->children[0].get()),
                        static_cast<std::uint64_t>(node->exponent < 0 ? -node->exponent : node->exponent));
            break;
        case WordNode::Kind::Commutator:
            r = sat_mul(2, sat_add(len(node->children[0].get()), len(node->children[1].get())));
            break;
        }
        memo.emplace(node, r);
        return r;
    };
    return root_ ? len(root_.get()) : 0;
}

std::size_t BraidWord::dag_size() const
{
    std::unordered_set<const WordNode*> seen;
    std::function<void(const WordNode*)> visit = [&](const WordNode* node) {
        if (!seen.insert(node).second)
            return;
        for (const auto& c : node->children)
            visit(c.get());
    };
    if (root_)
        visit(root_.get());
    return seen.size();
}

std::vector<Letter> BraidWord::flatten(std::uint64_t cap) const
{
    const std::uint64_t total = expanded_length();
    if (total > cap)
        throw Error("flatten: expanded length " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(total));
    auto push = [&](Letter l) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    };
    std::function<void(const WordNode*, bool)> emit = [&](const WordNode* node, bool inv) {
        switch (node->kind) {
        case WordNode::Kind::Literal:
            if (!inv)
                for (const auto& l : node->letters)
                    push(l);
            else
                for (auto it = node->letters.rbegin(); it != node->letters.rend(); ++it)
                    push(it->inverse());
            break;
        case WordNode::Kind::PureGen:
        case WordNode::Kind::Named:
            for (const auto& c : node->children)
                emit(c.get(), inv);
            break;
        case WordNode::Kind::Concat:
            if (!inv)
                for (const auto& c : node->children)
                    emit(c.get(), false);
            else
                for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
                    emit(it->get(), true);
            break;
        case WordNode::Kind::Inverse:
            emit(node->children[0].get(), !inv);
            break;
        case WordNode::Kind::Power: {
            const long long e = node->exponent;
            const bool flip = (e < 0) != inv;
            for (long long k = 0; k < (e < 0 ? -e : e); ++k)
                emit(node->children[0].get(), flip);
            break;
        }
        case WordNode::Kind::Commutator: {
            const WordNode* a = node->children[0].get();
            const WordNode* b = node->children[1].get();
            if (!inv) {
                emit(a, false), emit(b, false), emit(a, true), emit(b, true);
            } else {
                // [a,b]^-1 = b a b^-1 a^-1
                emit(b, false), emit(a, false), emit(b, true), emit(a, true);
            }
            break;
        }
        }
    };
    if (root_)
        emit(root_.get(), false);
    return out;
}

// --- printing --------------------------------------------------------------

namespace {

class Printer {
public:
    explicit Printer(const std::unordered_map<const WordNode*, std::string>* names) : names_(names) {}

    // Text for `node` usable as a term operand (atom or parenthesized group).
    std::string atom(const WordNode* node, bool skip_name = false)
    {
        if (!skip_name && names_)
            if (auto it = names_->find(node); it != names_->end())
                return it->second;
        switch (node->kind) {
        case WordNode::Kind::Literal:
            if (node->letters.size() == 1)
                return letter(node->letters[0]);
            return "(" + body(node, skip_name) + ")";
        case WordNode::Kind::PureGen:
            return "A" + index_text(node->pure_i) + index_text(node->pure_j);
        case WordNode::Kind::Commutator:
            return "[" + body(node->children[0].get()) + "," + body(node->children[1].get()) + "]";
        case WordNode::Kind::Named:
            if (node->children.empty())
                return "()";
            return atom(node->children[0].get());
        default:
            return "(" + body(node, skip_name) + ")";
        }
    }

    // Text for `node` as a juxtaposition of terms.
    std::string body(const WordNode* node, bool skip_name = false)
    {
        if (!skip_name && names_ && names_->count(node))
            return names_->at(node);
        switch (node->kind) {
        case WordNode::Kind::Literal: {
            std::string s;
            for (const auto& l : node->letters)
                s += (s.empty() ? "" : " ") + letter(l);
            return s;
        }
        case WordNode::Kind::Concat: {
            std::string s;
            for (const auto& c : node->children) {
                const std::string part = body(c.get());
                if (!part.empty())
                    s += (s.empty() ? "" : " ") + part;
            }
            return s;
        }
        case WordNode::Kind::Inverse:
            return atom(node->children[0].get()) + "^-1";
        case WordNode::Kind::Power:
            return atom(node->children[0].get()) + "^" + std::to_string(node->exponent);
        case WordNode::Kind::Named:
            return node->children.empty() ? "" : body(node->children[0].get());
        default:
            return atom(node, skip_name);
        }
    }

private:
    static std::string letter(const Letter& l) { return (l.sign > 0 ? "s" : "S") + index_text(l.gen); }

    const std::unordered_map<const WordNode*, std::string>* names_;
};

}  // namespace

std::string BraidWord::to_string() const
{
    if (!root_)
        return "";
    Printer p(nullptr);
    return p.body(root_.get());
}

SharedText format_shared(const BraidWord& w, const std::string& prefix)
{
    SharedText out;
    if (w.is_empty())
        return out;
    std::unordered_map<const WordNode*, int> uses;
    std::vector<const WordNode*> postorder;
    std::function<void(const WordNode*)> visit = [&](const WordNode* node) {
        if (uses[node]++ > 0)
            return;
        for (const auto& c : node->children)
            visit(c.get());
        postorder.push_back(node);
    };
    visit(w.root().get());

    std::unordered_map<const WordNode*, std::string> names;
    std::unordered_set<std::string> taken;
    int counter = 0;
    for (const WordNode* node : postorder) {
        if (node == w.root().get())
            continue;
        const bool trivial = node->kind == WordNode::Kind::PureGen ||
                             (node->kind == WordNode::Kind::Literal && node->letters.size() <= 2);
        const bool share = node->kind == WordNode::Kind::Named || (uses[node] > 1 && !trivial);
        if (!share)
            continue;
        std::string name = node->kind == WordNode::Kind::Named ? node->name : prefix + std::to_string(++counter);
        while (taken.count(name))
            name = prefix + std::to_string(++counter);
        taken.insert(name);
        Printer p(&names);
        out.bindings.emplace_back(name, p.body(node, true));
        names.emplace(node, name);
    }
    Printer p(&names);
    out.text = p.body(w.root().get(), true);
    return out;
}

// --- pure generators and permutations ----------------------------------------

BraidWord pure_gen_word(int i, int j, int n)
{
    if (i < 1 || j > n || i >= j)
        throw IndexOutOfRange("A" + std::to_string(i) + std::to_string(j) + " needs 1 <= i < j <= n = " +
                              std::to_string(n));
    std::vector<Letter> letters;
    for (int k = j - 1; k > i; --k)
        letters.push_back({k, 1});
    letters.push_back({i, 1});
    letters.push_back({i, 1});
    for (int k = i + 1; k <= j - 1; ++k)
        letters.push_back({k, -1});
    auto node = make_node(WordNode::Kind::PureGen);
    node->pure_i = i;
    node->pure_j = j;
    node->children = {BraidWord::literal(n, std::move(letters)).root()};
    return BraidWord::from_node(n, node);
}

Perm word_permutation(const BraidWord& w)
{
    const int n = w.strands();
    std::unordered_map<const WordNode*, Perm> memo;
    std::function<Perm(const WordNode*)> perm = [&](const WordNode* node) -> Perm {
        if (auto it = memo.find(node); it != memo.end())
            return it->second;
        Perm r(n);
        switch (node->kind) {
        case WordNode::Kind::Literal:
            for (const auto& l : node->letters)
                r = r.then(Perm::transposition(n, l.gen, l.gen + 1));
            break;
        case WordNode::Kind::PureGen:
            break;
        case WordNode::Kind::Named:
        case WordNode::Kind::Concat:
            for (const auto& c : node->children)
                r = r.then(perm(c.get()));
            break;
        case WordNode::Kind::Inverse:
            r = perm(node->children[0].get()).inverse();
            break;
        case WordNode::Kind::Power: {
            Perm base = perm(node->children[0].get());
            if (node->exponent < 0)
                base = base.inverse();
            // Permutation order divides n!, so reduce the exponent by repeated squaring.
            long long e = node->exponent < 0 ? -node->exponent : node->exponent;
            while (e > 0) {
                if (e & 1)
                    r = r.then(base);
                base = base.then(base);
                e >>= 1;
            }
            break;
        }
        case WordNode::Kind::Commutator: {
            const Perm a = perm(node->children[0].get());
            const Perm b = perm(node->children[1].get());
            r = a.then(b).then(a.inverse()).then(b.inverse());
            break;
        }
        }
        memo.emplace(node, r);
        return r;
    };
    return w.is_empty() ? Perm(n) : perm(w.root().get());
}

BraidWord perm_lift(const Perm& p)
{
    // Bubble-sort the image list: p composed with the swaps t_1..t_m (right to left) is the
    // identity, so p = t_m o ... o t_1, which is the word t_1 ... t_m acting left to right.
    const int n = p.size();
    std::vector<int> a = p.images();
    std::vector<Letter> letters;
    for (int pass = 0; pass < n; ++pass)
        for (int k = 0; k + 1 < n; ++k)
            if (a[static_cast<std::size_t>(k)] > a[static_cast<std::size_t>(k + 1)]) {
                std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(k + 1)]);
                letters.push_back({k + 1, 1});
            }
    return BraidWord::literal(n, std::move(letters));
}

std::string alpha_text() { return "[A13,A23][A24,A14][A14,A34][A34,A24]"; }
std::string delta_text() { return "[A25^2 A45, [ALPHA, s4]]"; }

Bindings builtin_bindings(int n)
{
    Bindings b;
    if (n < 5)
        return b;
    const BraidWord alpha = parse_word(alpha_text(), n).named("ALPHA");
    b.emplace("ALPHA", alpha);
    b.emplace("W3", BraidWord::commutator(alpha, BraidWord::generator(n, 4)).named("W3"));
    b.emplace("DELTA", parse_word(delta_text(), n, b).named("DELTA"));
    return b;
}

}  // namespace burau
