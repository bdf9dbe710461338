#pragma once

#include "burau/bigint.hpp"
#include "burau/perm.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace burau {

/// sigma_gen^sign, gen is 1-based.
struct Letter {
    int gen = 1;
    int sign = 1;

    Letter inverse() const { return {gen, -sign}; }
    friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.sign == b.sign; }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

struct WordNode;
using NodePtr = std::shared_ptr<const WordNode>;

/// Straight-line program node. Subterms are shared by pointer.
struct WordNode {
    enum class Kind { Literal, PureGen, Named, Concat, Inverse, Power, Commutator };

    Kind kind = Kind::Literal;
    std::vector<Letter> letters;     // Literal
    std::vector<NodePtr> children;   // PureGen/Named/Inverse/Power: 1; Concat: k; Commutator: 2
    long long exponent = 1;          // Power
    int pure_i = 0, pure_j = 0;      // PureGen (1-based, i < j)
    std::string name;                // Named
};

/// Element of B_n written as a shared-subterm word in the sigma_i^{+-1}.
///
/// The empty word (null root) is the identity. Words are immutable; all
/// constructors build new nodes that share their operands.
class BraidWord {
public:
    explicit BraidWord(int n = 1);

    static BraidWord identity(int n) { return BraidWord(n); }
    static BraidWord generator(int n, int i, int sign = 1);
    static BraidWord literal(int n, std::vector<Letter> letters);
    /// Wraps an existing node; the caller guarantees its generators fit n strands.
    static BraidWord from_node(int n, NodePtr root) { return BraidWord(n, std::move(root)); }

    int strands() const { return n_; }
    const NodePtr& root() const { return root_; }
    bool is_empty() const { return root_ == nullptr; }

    BraidWord operator*(const BraidWord& other) const;
    BraidWord inverse() const;
    BraidWord power(long long e) const;
    /// Group commutator [a, b] = a b a^-1 b^-1.
    static BraidWord commutator(const BraidWord& a, const BraidWord& b);
    /// u w u^-1.
    BraidWord conjugated_by(const BraidWord& u) const;
    /// Product of several words as one flat Concat node.
    static BraidWord product(int n, const std::vector<BraidWord>& factors);
    /// Wraps the word in a named node; printing with bindings refers to it by name.
    BraidWord named(std::string name) const;

    /// Number of letters after full expansion, before free reduction (saturates at UINT64_MAX).
    std::uint64_t expanded_length() const;
    /// Number of distinct DAG nodes.
    std::size_t dag_size() const;
    /// Expanded, freely reduced letter sequence. Throws if the expanded length exceeds cap.
    std::vector<Letter> flatten(std::uint64_t cap = 1u << 22) const;

    /// Surface syntax with every subterm inlined.
    std::string to_string() const;

private:
    BraidWord(int n, NodePtr root) : n_(n), root_(std::move(root)) {}
    void require_same_strands(const BraidWord& other) const;

    int n_;
    NodePtr root_;
};

/// Text of a word whose shared subterms are factored into let-bindings.
/// Bindings are ordered so each refers only to earlier ones.
struct SharedText {
    std::string text;
    std::vector<std::pair<std::string, std::string>> bindings;
};

/// Names every non-trivial subterm used more than once (and every Named node).
SharedText format_shared(const BraidWord& w, const std::string& prefix = "W");

using Bindings = std::map<std::string, BraidWord>;

/// Parses the word grammar. Names resolve through `bindings`.
BraidWord parse_word(const std::string& text, int n, const Bindings& bindings = {});
/// Parses `text` after adding the given let-bindings in order (each may use earlier ones).
BraidWord parse_word_with(const std::string& text, int n,
                          const std::vector<std::pair<std::string, std::string>>& lets, Bindings base = {});

/// A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1).
BraidWord pure_gen_word(int i, int j, int n);
/// Permutation image; words act left to right.
Perm word_permutation(const BraidWord& w);
/// Positive word with the given permutation image.
BraidWord perm_lift(const Perm& p);

/// Built-in bindings for n >= 5: ALPHA and DELTA (and W3 = [ALPHA, s4]).
Bindings builtin_bindings(int n);
std::string alpha_text();
std::string delta_text();

}  // namespace burau
