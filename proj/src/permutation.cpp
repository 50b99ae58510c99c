#include "dessinlab/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace dessinlab {

Permutation::Permutation(int domain_size) {
    if (domain_size < 0)
        throw validation_error("permutation domain size must be non-negative");
    images_.resize(domain_size);
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::identity(int domain_size) { return Permutation(domain_size); }

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            throw validation_error("image table is not a bijection of the domain");
        seen[v] = 1;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int domain_size,
                                     const std::vector<std::vector<int>>& cycs) {
    Permutation p(domain_size);
    std::vector<char> seen(domain_size, 0);
    for (const auto& cyc : cycs) {
        if (cyc.empty()) throw validation_error("empty cycle");
        for (int v : cyc) {
            if (v < 1 || v > domain_size)
                throw validation_error("cycle point " + std::to_string(v) +
                                       " out of range 1.." + std::to_string(domain_size));
            if (seen[v - 1])
                throw validation_error("cycle point " + std::to_string(v) + " repeats");
            seen[v - 1] = 1;
        }
        const int k = static_cast<int>(cyc.size());
        for (int t = 0; t < k; ++t)
            p.images_[cyc[t] - 1] = cyc[(t + 1) % k] - 1;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 0; k < size(); ++k)
        if (images_[k] != k) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw validation_error("compose: domain mismatch");
    std::vector<int> im(p.size());
    for (int k = 0; k < p.size(); ++k)
        im[k] = q.apply0(p.apply0(k));
    return Permutation::from_images(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(p.size());
    for (int k = 0; k < p.size(); ++k)
        im[p.apply0(k)] = k;
    return Permutation::from_images(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    if (p.size() != g.size())
        throw validation_error("conjugate: domain mismatch");
    std::vector<int> im(p.size());
    for (int k = 0; k < p.size(); ++k)
        im[g.apply0(k)] = g.apply0(p.apply0(k));
    return Permutation::from_images(std::move(im));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (int k = 0; k < p.size(); ++k) {
        if (seen[k]) continue;
        std::vector<int> cyc;
        int x = k;
        do {
            seen[x] = 1;
            cyc.push_back(x + 1);
            x = p.apply0(x);
        } while (x != k);
        out.push_back(std::move(cyc));
    }
    // Starting each walk at the smallest unseen point already yields cycles
    // rotated to their minimum and sorted by minimum.
    return out;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> type;
    for (const auto& cyc : cycles(p))
        type.push_back(static_cast<int>(cyc.size()));
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

bool is_fpf_involution(const Permutation& p) {
    for (int k = 0; k < p.size(); ++k) {
        const int im = p.apply0(k);
        if (im == k || p.apply0(im) != k) return false;
    }
    return true;
}

bool is_transitive(const std::vector<Permutation>& gens) {
    if (gens.empty())
        throw validation_error("is_transitive: empty generator list");
    const int n = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n)
            throw validation_error("is_transitive: domain mismatch");
    if (n == 0) return true;

    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            const int y = g.apply0(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

Permutation random_permutation(int domain_size, std::mt19937_64& rng) {
    std::vector<int> im(domain_size);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation::from_images(std::move(im));
}

} // namespace dessinlab
