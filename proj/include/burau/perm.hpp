#pragma once

#include <string>
#include <vector>

namespace burau {

/// Permutation of {1..n}, stored 0-based.
///
/// Composition reads left to right: (p.then(q))(x) = q(p(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    /// images are 1-based; throws unless they form a bijection of 1..n.
    static Perm from_images(const std::vector<int>& images);
    static Perm transposition(int n, int a, int b);  // 1-based

    int size() const { return static_cast<int>(img_.size()); }
    /// 1-based image of 1-based x.
    int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)] + 1; }
    std::vector<int> images() const;
    bool is_identity() const;

    Perm then(const Perm& q) const;
    Perm inverse() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    /// Cycle notation, e.g. "(1 3 2)"; "()" for the identity.
    std::string cycles() const;

    /// All permutations of {1..n} in lexicographic order of images.
    static std::vector<Perm> all(int n);

private:
    std::vector<int> img_;
};

}  // namespace burau
