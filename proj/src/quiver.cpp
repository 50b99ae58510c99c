#include "dessinlab/quiver.hpp"

#include <algorithm>
#include <set>

namespace dessinlab {

Quiver Quiver::of(const CleanDessin& d) {
    Quiver q;
    q.vertex_edges_ = d.edges();
    q.dart_rotation_.assign(d.dart_count(), std::nullopt);

    const auto sigma_cycles = cycles(d.sigma());
    for (int c = 0; c < static_cast<int>(sigma_cycles.size()); ++c) {
        const auto& cyc = sigma_cycles[c];
        const int k = static_cast<int>(cyc.size());
        if (k < 2) continue; // degree-1 black vertices contribute no arrows
        SpecialCycle sc;
        sc.black_cycle_index = c;
        const int cycle_id = static_cast<int>(q.cycles_.size());
        for (int p = 0; p < k; ++p) {
            Arrow a;
            a.id = static_cast<int>(q.arrows_.size());
            a.source = d.edge_of_dart(cyc[p]);
            a.target = d.edge_of_dart(cyc[(p + 1) % k]);
            a.cycle = cycle_id;
            a.position = p;
            a.dart = cyc[p];
            q.dart_rotation_[cyc[p] - 1] = RotationRef{cycle_id, p};
            sc.arrow_ids.push_back(a.id);
            q.arrows_.push_back(a);
        }
        q.cycles_.push_back(std::move(sc));
    }
    return q;
}

std::optional<RotationRef> Quiver::rotation_of_dart(int dart) const {
    return dart_rotation_.at(dart - 1);
}

int Quiver::loop_arrow_count() const {
    int n = 0;
    for (const auto& a : arrows_)
        if (a.source == a.target) ++n;
    return n;
}

RelationSet relations_of(const Quiver& q) {
    RelationSet rel;

    // Type one: at each quiver vertex whose two dart incidences both carry a
    // rotation (black endpoints of degree >= 2), the two rotations starting
    // there are identified. For a loop edge these are two rotations of the
    // same special cycle.
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto& [di, dj] = q.vertex_edge(v);
        const auto ri = q.rotation_of_dart(di);
        const auto rj = q.rotation_of_dart(dj);
        if (ri && rj) rel.type_one.push_back({v, *ri, *rj});
    }

    // Type two: one relation C*a per rotation C, a the first arrow of C.
    for (int c = 0; c < static_cast<int>(q.special_cycles().size()); ++c)
        for (int s = 0; s < q.special_cycles()[c].length(); ++s)
            rel.type_two.push_back({c, s});

    // Type three: composable length-2 paths that are not cyclically
    // consecutive within one special cycle.
    std::vector<std::vector<int>> arrows_from(q.vertex_count());
    for (const auto& a : q.arrows()) arrows_from[a.source].push_back(a.id);
    for (const auto& a : q.arrows()) {
        const int k = q.special_cycles()[a.cycle].length();
        const int succ = q.special_cycles()[a.cycle].arrow_ids[(a.position + 1) % k];
        for (int b : arrows_from[a.target])
            if (b != succ) rel.type_three.emplace_back(a.id, b);
    }
    return rel;
}

AdmissibleCutRange::AdmissibleCutRange(const Quiver& q) : quiver_(&q) {
    odometer_.assign(q.special_cycles().size(), 0);
}

std::optional<AdmissibleCut> AdmissibleCutRange::next() {
    if (done_) return std::nullopt;
    AdmissibleCut cut;
    for (int c = 0; c < static_cast<int>(odometer_.size()); ++c)
        cut.arrow_ids.push_back(quiver_->special_cycles()[c].arrow_ids[odometer_[c]]);
    // advance
    done_ = true;
    for (int c = static_cast<int>(odometer_.size()) - 1; c >= 0; --c) {
        if (++odometer_[c] < quiver_->special_cycles()[c].length()) {
            done_ = false;
            break;
        }
        odometer_[c] = 0;
    }
    return cut;
}

std::uint64_t AdmissibleCutRange::count() const {
    std::uint64_t n = 1;
    for (const auto& sc : quiver_->special_cycles()) n *= sc.length();
    return n;
}

AdmissibleCutRange admissible_cuts(const Quiver& q) { return AdmissibleCutRange(q); }

GentleReport check_gentle(const Quiver& q, const AdmissibleCut& cut) {
    // Admissibility: exactly one arrow from every special cycle.
    std::vector<int> chosen(q.special_cycles().size(), 0);
    for (int id : cut.arrow_ids) {
        if (id < 0 || id >= static_cast<int>(q.arrows().size()))
            throw validation_error("cut: arrow id out of range");
        ++chosen[q.arrows()[id].cycle];
    }
    for (int c = 0; c < static_cast<int>(chosen.size()); ++c)
        if (chosen[c] != 1)
            throw validation_error("cut is not admissible: special cycle " +
                                   std::to_string(c) + " has " +
                                   std::to_string(chosen[c]) + " chosen arrows");

    std::set<int> removed(cut.arrow_ids.begin(), cut.arrow_ids.end());
    const auto survives = [&](int id) { return !removed.count(id); };

    GentleReport report;
    const auto fail = [&](std::string msg) {
        report.gentle = false;
        report.violations.push_back(std::move(msg));
    };

    // Surviving composable pairs, split into special-subpath pairs (outside
    // the ideal) and type-three pairs (the ideal generators).
    std::vector<std::vector<int>> out(q.vertex_count()), in(q.vertex_count());
    for (const auto& a : q.arrows()) {
        if (!survives(a.id)) continue;
        out[a.source].push_back(a.id);
        in[a.target].push_back(a.id);
    }

    // (S0)
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (out[v].size() > 2)
            fail("(S0): " + std::to_string(out[v].size()) + " arrows start at vertex " +
                 std::to_string(v));
        if (in[v].size() > 2)
            fail("(S0): " + std::to_string(in[v].size()) + " arrows end at vertex " +
                 std::to_string(v));
    }

    const auto is_special_pair = [&](int a_id, int b_id) {
        const Arrow& a = q.arrows()[a_id];
        const Arrow& b = q.arrows()[b_id];
        if (a.cycle != b.cycle) return false;
        const int k = q.special_cycles()[a.cycle].length();
        return b.position == (a.position + 1) % k;
    };

    // (S1) and (S2): per arrow, at most one composable continuation outside
    // the ideal and at most one inside, in both directions.
    for (const auto& a : q.arrows()) {
        if (!survives(a.id)) continue;
        int nonrel_succ = 0, rel_succ = 0, nonrel_pred = 0, rel_pred = 0;
        for (int b : out[a.target]) (is_special_pair(a.id, b) ? nonrel_succ : rel_succ)++;
        for (int c : in[a.source]) (is_special_pair(c, a.id) ? nonrel_pred : rel_pred)++;
        if (nonrel_succ > 1) fail("(S1): arrow " + std::to_string(a.id) + " has " +
                                  std::to_string(nonrel_succ) + " continuations outside the ideal");
        if (nonrel_pred > 1) fail("(S1): arrow " + std::to_string(a.id) + " has " +
                                  std::to_string(nonrel_pred) + " predecessors outside the ideal");
        if (rel_succ > 1) fail("(S2): arrow " + std::to_string(a.id) + " has " +
                               std::to_string(rel_succ) + " continuations inside the ideal");
        if (rel_pred > 1) fail("(S2): arrow " + std::to_string(a.id) + " has " +
                               std::to_string(rel_pred) + " predecessors inside the ideal");
    }

    // (S3): the surviving ideal generators are exactly the type-three pairs
    // among surviving arrows, all of length 2 by construction.
    return report;
}

} // namespace dessinlab
