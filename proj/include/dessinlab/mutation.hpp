#pragma once

// Kauer mutation of a clean dessin at an edge: the two half-edges slide to
// the next position in rotation order. Leaves and trivial loops shift along
// their outer face; degenerate edges (single-edge dessin, isolated loop)
// mutate to themselves. Mutations keep alpha invariant and preserve edge
// count, black vertex count, face degrees and genus.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dessinlab/dessin.hpp"

namespace dessinlab {

enum class MutationCase { General, Leaf, TrivialLoop, Identity };

std::string to_string(MutationCase c);

// General-case insertion side. The default puts each moved dart
// immediately after its target in rotation order; the alternative reading
// (before the target) is kept for diagnostics only — it does not preserve
// face degrees in general.
enum class MutationConvention { AfterTarget, BeforeTarget };

struct MutationStep {
    int dart_low = 0;
    int dart_high = 0;
    MutationCase kind = MutationCase::General;
    CleanDessin result;
};

MutationStep mutate(const CleanDessin& d, int dart,
                    MutationConvention convention = MutationConvention::AfterTarget);

// Period bound from the faces at the edge: m+n-2 when the edge bounds two
// distinct faces of degrees m and n, m-2 when it bounds one face of degree
// m, and 1 for identity-case edges. The closed law is exact only for
// orbits that never slide a dart along a loop edge; sliding past a loop
// advances two face positions in one move, so such orbits return early or,
// on some 4-edge dessins, late.
int period_bound(const CleanDessin& d, int dart);

// Smallest p >= 1 with mu_e^p(d) = d as labeled triples, searched up to
// period_bound; throws invariant_violation when the orbit does not return
// within it (possible only in the loop-sliding regime above).
int exact_period(const CleanDessin& d, int dart);

struct MutationLimits {
    int max_class_size = 100000;
};

struct MutationClass {
    std::vector<CanonicalForm> members;
    std::vector<CleanDessin> representatives;
    // adjacency[u] maps the low dart of a mutated edge to the member index
    // it leads to.
    std::vector<std::map<int, int>> adjacency;
    std::vector<int> star_members; // indices with is_generalized_star

    bool contains(const CanonicalForm& form) const;
    int index_of(const CanonicalForm& form) const; // -1 if absent
};

// Breadth-first closure of single-edge mutations up to isomorphism.
MutationClass mutation_class(const CleanDessin& d, const MutationLimits& limits = {});

// Some black vertex meets every edge and at most one other black vertex has
// degree >= 2.
bool is_generalized_star(const CleanDessin& d);

// Darts to mutate, in order, to reach a generalized star from d (up to
// isomorphism); empty when d already is one.
std::vector<int> star_reduce(const CleanDessin& d, const MutationLimits& limits = {});

enum class EquivalenceVerdict {
    EquivalentByGenus0Criterion,
    EquivalentByMutationPath,
    EquivalentByTriangulation,
    NotMutationConnected,
    Undecided,
};

std::string to_string(EquivalenceVerdict v);

struct EquivalenceResult {
    EquivalenceVerdict verdict = EquivalenceVerdict::Undecided;
    // When present: darts whose successive mutations carry d1 to a dessin
    // isomorphic to d2.
    std::optional<std::vector<int>> witness_path;
};

// Mutation-connected dessins are derived equivalent (Kauer); disconnected
// classes are reported as not-mutation-connected, which is not a proof of
// derived inequivalence.
EquivalenceResult derived_equivalent(const CleanDessin& d1, const CleanDessin& d2,
                                     const MutationLimits& limits = {});

} // namespace dessinlab
