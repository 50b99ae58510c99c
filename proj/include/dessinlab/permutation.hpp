#pragma once

// Exact permutation arithmetic on a fixed finite domain {1..N}.
//
// Convention: permutations act on the right, i.e. the image of i under p*q
// is (i^p)^q. All public I/O is 1-based; storage is 0-based.

#include <cstdint>
#include <random>
#include <vector>

#include "dessinlab/errors.hpp"

namespace dessinlab {

class Permutation {
public:
    // Identity on {1..domain_size}.
    explicit Permutation(int domain_size);

    static Permutation identity(int domain_size);

    // images[k] is the 0-based image of point k. Validates bijectivity.
    static Permutation from_images(std::vector<int> images);

    // Cycles use 1-based points; omitted points are fixed. Validates that
    // no point repeats and all points lie in {1..domain_size}.
    static Permutation from_cycles(int domain_size,
                                   const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }

    // Image of the 1-based point i.
    int apply(int i) const { return images_[i - 1] + 1; }
    // Image of the 0-based point k.
    int apply0(int k) const { return images_[k]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_; // 0-based image table
};

// Right-action product: i^{compose(p,q)} = (i^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// g^{-1} p g under the right action: i^{conjugate(p,g)} = ((i^{g^-1})^p)^g.
Permutation conjugate(const Permutation& p, const Permutation& g);

// Cycle decomposition including fixed points, 1-based and canonical: each
// cycle starts at its minimum, cycles sorted by minimum.
std::vector<std::vector<int>> cycles(const Permutation& p);

// Multiset of cycle lengths, sorted descending; sums to the domain size.
std::vector<int> cycle_type(const Permutation& p);

bool is_fpf_involution(const Permutation& p);

// True iff the generated group acts with a single orbit. Orbit flood fill,
// no group enumeration. Throws on empty input or mixed domain sizes.
bool is_transitive(const std::vector<Permutation>& gens);

Permutation random_permutation(int domain_size, std::mt19937_64& rng);

} // namespace dessinlab
