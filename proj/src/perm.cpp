#include "burau/perm.hpp"

#include "burau/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace burau {

Perm::Perm(int n) : img_(static_cast<std::size_t>(n))
{
    std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(const std::vector<int>& images)
{
    const int n = static_cast<int>(images.size());
    Perm p;
    p.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int i = 0; i < n; ++i) {
        const int v = images[static_cast<std::size_t>(i)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw Error("Perm: images do not form a bijection of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.img_[static_cast<std::size_t>(i)] = v - 1;
    }
    return p;
}

Perm Perm::transposition(int n, int a, int b)
{
    if (a < 1 || b < 1 || a > n || b > n)
        throw IndexOutOfRange("Perm::transposition: index out of range");
    Perm p(n);
    std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
    return p;
}

std::vector<int> Perm::images() const
{
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        out[i] = img_[i] + 1;
    return out;
}

bool Perm::is_identity() const
{
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i))
            return false;
    return true;
}

Perm Perm::then(const Perm& q) const
{
    if (q.size() != size())
        throw DimensionMismatch("Perm::then: size mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        r.img_[i] = q.img_[static_cast<std::size_t>(img_[i])];
    return r;
}

Perm Perm::inverse() const
{
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        r.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return r;
}

std::string Perm::cycles() const
{
    std::ostringstream os;
    std::vector<bool> done(img_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (done[i] || img_[i] == static_cast<int>(i))
            continue;
        any = true;
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = static_cast<std::size_t>(img_[j]);
        }
        os << ")";
    }
    return any ? os.str() : "()";
}

std::vector<Perm> Perm::all(int n)
{
    std::vector<Perm> out;
    Perm p(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img_.begin(), p.img_.end()));
    return out;
}

}  // namespace burau
