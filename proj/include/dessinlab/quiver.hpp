#pragma once

// The quiver of a clean dessin: one vertex per dessin edge, one cycle of
// arrows per black vertex of degree >= 2 (in rotation order), plus the
// relation sets and admissible cuts that present the associated algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessinlab/dessin.hpp"

namespace dessinlab {

struct Arrow {
    int id = 0;
    int source = 0;   // quiver vertex (dessin edge index)
    int target = 0;
    int cycle = 0;    // special cycle index
    int position = 0; // position within the cycle's rotation order
    int dart = 0;     // the dart inducing this arrow
};

struct SpecialCycle {
    int black_cycle_index = 0;  // index into cycles(sigma), degree >= 2
    std::vector<int> arrow_ids; // cyclic order; length = black vertex degree
    int length() const { return static_cast<int>(arrow_ids.size()); }
};

// A rotation of a special cycle: the cycle read from `start`.
struct RotationRef {
    int cycle = 0;
    int start = 0;
    friend bool operator==(const RotationRef&, const RotationRef&) = default;
};

class Quiver {
public:
    static Quiver of(const CleanDessin& d);

    int vertex_count() const { return static_cast<int>(vertex_edges_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<SpecialCycle>& special_cycles() const { return cycles_; }

    // The alpha-transposition (low, high) behind quiver vertex v.
    const std::pair<int, int>& vertex_edge(int v) const { return vertex_edges_[v]; }

    const Arrow& arrow_at(int cycle, int position) const {
        return arrows_[cycles_[cycle].arrow_ids[position]];
    }

    // (cycle, position) of the arrow induced by the dart, if its black
    // vertex has degree >= 2.
    std::optional<RotationRef> rotation_of_dart(int dart) const;

    int loop_arrow_count() const;

private:
    std::vector<std::pair<int, int>> vertex_edges_;
    std::vector<Arrow> arrows_;
    std::vector<SpecialCycle> cycles_;
    std::vector<std::optional<RotationRef>> dart_rotation_; // by dart (0-based)
};

struct TypeOneRelation {
    int vertex = 0; // quiver vertex where the two rotations start
    RotationRef lhs, rhs;
};

struct RelationSet {
    std::vector<TypeOneRelation> type_one;
    // C a with C the rotation and a its first arrow, one per rotation.
    std::vector<RotationRef> type_two;
    // Length-2 paths (arrow ids) that are not special-cycle subpaths.
    std::vector<std::pair<int, int>> type_three;
};

RelationSet relations_of(const Quiver& q);

struct AdmissibleCut {
    std::vector<int> arrow_ids; // exactly one arrow from every special cycle
};

// Lazily yields all products of one-arrow-per-cycle choices.
class AdmissibleCutRange {
public:
    explicit AdmissibleCutRange(const Quiver& q);
    std::optional<AdmissibleCut> next();
    std::uint64_t count() const; // product of special cycle lengths

private:
    const Quiver* quiver_;
    std::vector<int> odometer_;
    bool done_ = false;
};

AdmissibleCutRange admissible_cuts(const Quiver& q);

struct GentleReport {
    bool gentle = true;
    std::vector<std::string> violations;
};

// Evaluates (S0)-(S3) for the quiver cut along `cut`, with the ideal
// generated by the surviving length-2 relations. Throws validation_error
// if the cut is not admissible.
GentleReport check_gentle(const Quiver& q, const AdmissibleCut& cut);

} // namespace dessinlab
