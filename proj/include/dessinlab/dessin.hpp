#pragma once

// Clean dessins d'enfants as validated permutation triples (sigma, alpha, phi)
// on the darts {1..2n}: sigma records the counter-clockwise rotation of darts
// at each black vertex, alpha pairs the two darts of every edge, and
// phi = (sigma*alpha)^-1 records the face boundaries.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessinlab/permutation.hpp"

namespace dessinlab {

struct Passport {
    std::vector<int> black_degrees; // cycle type of sigma, descending
    std::vector<int> face_degrees;  // cycle type of phi, descending
    int edge_count = 0;
    int genus = 0;

    friend bool operator==(const Passport&, const Passport&) = default;
    friend auto operator<=>(const Passport&, const Passport&) = default;
};

struct EdgeRef {
    int dart_low = 0;  // the two darts of the edge, dart_low < dart_high
    int dart_high = 0;
    bool leaf = false;         // sigma fixes one of the darts
    bool loop = false;         // both darts lie in one sigma-cycle
    bool trivial_loop = false; // phi fixes one of the darts (degree-1 face)
};

class CleanDessin {
public:
    // Validates: shared even domain, alpha a fixed-point-free involution,
    // <sigma, alpha> transitive. phi is derived as (sigma*alpha)^-1.
    static CleanDessin make(Permutation sigma, Permutation alpha);

    const Permutation& sigma() const { return sigma_; }
    const Permutation& alpha() const { return alpha_; }
    const Permutation& phi() const { return phi_; }

    int edge_count() const { return sigma_.size() / 2; } // n
    int dart_count() const { return sigma_.size(); }     // 2n

    Passport passport() const;
    int genus() const { return passport().genus; }

    EdgeRef classify_edge(int dart) const;

    // Edges as (low, high) dart pairs, sorted by low dart.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Index into edges() of the edge containing the given dart.
    int edge_of_dart(int dart) const;

    friend bool operator==(const CleanDessin& a, const CleanDessin& b) {
        return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
    }

private:
    CleanDessin(Permutation s, Permutation a, Permutation f);

    Permutation sigma_, alpha_, phi_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_index_; // dart (0-based) -> index into edges_
};

// Byte-comparable normal form: relabeled (sigma, alpha) image tables,
// minimized over all root darts. Equal iff the dessins are isomorphic
// via simultaneous conjugation.
using CanonicalForm = std::vector<std::uint16_t>;

CanonicalForm canonical_form(const CleanDessin& d);

// FNV-1a 64-bit digest of the canonical form, as 16 hex characters.
std::string canonical_digest(const CleanDessin& d);

// Rebuild the representative dessin encoded by a canonical form.
CleanDessin dessin_from_canonical(const CanonicalForm& form);

bool is_isomorphic(const CleanDessin& a, const CleanDessin& b);

// A conjugator g with (sigma_a^g, alpha_a^g) = (sigma_b, alpha_b), when one exists.
std::optional<Permutation> find_conjugator(const CleanDessin& a, const CleanDessin& b);

CleanDessin conjugate(const CleanDessin& d, const Permutation& g);

struct PassportFilter {
    std::optional<int> genus;
    std::optional<int> black_count;
    std::optional<int> face_count;
    std::optional<std::vector<int>> face_degrees;  // multiset, any order
    std::optional<std::vector<int>> black_degrees; // multiset, any order

    bool matches(const Passport& p) const;
};

struct EnumerationLimits {
    int max_edges = 5;
};

// All isomorphism classes of clean dessins with the given edge count:
// alpha is fixed to (1 2)(3 4)..., sigma runs over the symmetric group,
// transitive pairs are kept and deduplicated by canonical form.
// Representatives are rebuilt from their canonical forms.
std::vector<CleanDessin> enumerate_dessins(int edge_count,
                                           const PassportFilter& filter = {},
                                           const EnumerationLimits& limits = {});

// The clean double cover of an arbitrary transitive pair (sigma, alpha) on N
// darts: whites of the input become black, each input dart becomes an edge.
// Output black degrees = cycle_type(sigma) + cycle_type(alpha); N edges.
CleanDessin clean_cover(const Permutation& sigma, const Permutation& alpha);

// Combinatorial barycentric subdivision: one face-center vertex per face,
// spokes to every corner visit of its boundary walk. Output has 6n edges,
// (#black + n + #faces) black vertices, 4n triangular faces, equal genus.
CleanDessin triangulate(const CleanDessin& d);

// Uniform sigma with the standard alpha, rejection sampling on transitivity.
CleanDessin random_dessin(int edge_count, std::uint64_t seed);

// The standard pairing (1 2)(3 4)...(2n-1 2n).
Permutation standard_pairing(int edge_count);

} // namespace dessinlab
