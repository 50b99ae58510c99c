#include "dessinlab/mutation.hpp"

#include <algorithm>
#include <map>

namespace dessinlab {

std::string to_string(MutationCase c) {
    switch (c) {
        case MutationCase::General: return "general";
        case MutationCase::Leaf: return "leaf";
        case MutationCase::TrivialLoop: return "trivial_loop";
        case MutationCase::Identity: return "identity";
    }
    return "?";
}

std::string to_string(EquivalenceVerdict v) {
    switch (v) {
        case EquivalenceVerdict::EquivalentByGenus0Criterion:
            return "equivalent-by-genus0-criterion";
        case EquivalenceVerdict::EquivalentByMutationPath:
            return "equivalent-by-mutation-path";
        case EquivalenceVerdict::EquivalentByTriangulation:
            return "equivalent-by-triangulation";
        case EquivalenceVerdict::NotMutationConnected:
            return "not-mutation-connected";
        case EquivalenceVerdict::Undecided:
            return "undecided";
    }
    return "?";
}

namespace {

// In-place surgery helpers on a 1-based image table of sigma.
struct Rotation {
    std::vector<int> img; // 0-based images

    explicit Rotation(const Permutation& p) : img(p.images()) {}

    int next(int dart) const { return img[dart - 1] + 1; }

    void remove(int dart) {
        // prev(dart) -> next(dart); dart becomes fixed.
        int prev = dart;
        while (next(prev) != dart) prev = next(prev);
        img[prev - 1] = img[dart - 1];
        img[dart - 1] = dart - 1;
    }

    void insert_after(int target, int dart) {
        img[dart - 1] = img[target - 1];
        img[target - 1] = dart - 1;
    }

    void insert_before(int target, int dart) {
        int prev = target;
        while (next(prev) != target) prev = next(prev);
        img[prev - 1] = dart - 1;
        img[dart - 1] = target - 1;
    }

    Permutation permutation() const { return Permutation::from_images(img); }
};

MutationStep finish(const CleanDessin& d, int i, int j, MutationCase kind,
                    Permutation new_sigma) {
    CleanDessin result = CleanDessin::make(std::move(new_sigma), d.alpha());
    // Proven mutation properties; a violation is a surgery fault.
    const Passport before = d.passport();
    const Passport after = result.passport();
    if (before.face_degrees != after.face_degrees ||
        before.black_degrees.size() != after.black_degrees.size() ||
        before.genus != after.genus)
        throw invariant_violation("mutation changed the face degrees, vertex count or genus");
    return MutationStep{std::min(i, j), std::max(i, j), kind, std::move(result)};
}

} // namespace

MutationStep mutate(const CleanDessin& d, int dart, MutationConvention convention) {
    if (dart < 1 || dart > d.dart_count())
        throw validation_error("dart index " + std::to_string(dart) + " out of range");

    const Permutation& sigma = d.sigma();
    const Permutation& alpha = d.alpha();
    int i = dart;
    int j = alpha.apply(dart);
    const EdgeRef e = d.classify_edge(dart);

    if (e.leaf) {
        const bool i_fixed = sigma.apply(i) == i;
        const bool j_fixed = sigma.apply(j) == j;
        if (i_fixed && j_fixed) // single-edge dessin
            return MutationStep{std::min(i, j), std::max(i, j), MutationCase::Identity,
                                CleanDessin::make(sigma, alpha)};
        if (i_fixed) std::swap(i, j); // i is the moving dart
        const int target = alpha.apply(sigma.apply(i));
        Rotation rot(sigma);
        rot.remove(i);
        rot.insert_after(target, i);
        return finish(d, i, j, MutationCase::Leaf, rot.permutation());
    }

    if (e.trivial_loop) {
        if (sigma.apply(i) != alpha.apply(i)) std::swap(i, j); // i^sigma = i^alpha = j
        if (sigma.apply(sigma.apply(i)) == i) // isolated loop
            return MutationStep{std::min(i, j), std::max(i, j), MutationCase::Identity,
                                CleanDessin::make(sigma, alpha)};
        // Slide the adjacent pair (i, i^sigma) after the next edge around
        // the vertex; the literal i^{sigma alpha} would be i itself.
        const int target = alpha.apply(sigma.apply(sigma.apply(i)));
        Rotation rot(sigma);
        rot.remove(j); // j = i^sigma; remove deeper dart first
        rot.remove(i);
        rot.insert_after(target, i);
        rot.insert_after(i, j);
        return finish(d, i, j, MutationCase::TrivialLoop, rot.permutation());
    }

    // General case: targets computed in the input, both darts deleted before
    // either insertion (order-independent since the targets are distinct).
    const int ti = alpha.apply(sigma.apply(i));
    const int tj = alpha.apply(sigma.apply(j));
    Rotation rot(sigma);
    rot.remove(i);
    rot.remove(j);
    if (convention == MutationConvention::AfterTarget) {
        rot.insert_after(ti, i);
        rot.insert_after(tj, j);
    } else {
        rot.insert_before(ti, i);
        rot.insert_before(tj, j);
    }
    return finish(d, i, j, MutationCase::General, rot.permutation());
}

int period_bound(const CleanDessin& d, int dart) {
    if (dart < 1 || dart > d.dart_count())
        throw validation_error("dart index " + std::to_string(dart) + " out of range");
    const int i = dart;
    const int j = d.alpha().apply(dart);
    const EdgeRef e = d.classify_edge(dart);
    if (e.leaf && d.sigma().apply(i) == i && d.sigma().apply(j) == j) return 1;
    if (e.trivial_loop) {
        const int x = d.sigma().apply(i) == d.alpha().apply(i) ? i : j;
        if (d.sigma().apply(d.sigma().apply(x)) == x) return 1;
    }

    // Face degrees at the edge: the phi-cycle lengths of its two darts.
    int m = 0;
    bool shared = false;
    int x = i;
    do {
        ++m;
        if (x == j) shared = true;
        x = d.phi().apply(x);
    } while (x != i);
    if (shared) return m - 2;
    int n = 0;
    x = j;
    do {
        ++n;
        x = d.phi().apply(x);
    } while (x != j);
    return m + n - 2;
}

int exact_period(const CleanDessin& d, int dart) {
    const int bound = period_bound(d, dart);
    CleanDessin cur = mutate(d, dart).result;
    for (int p = 1; p <= bound; ++p) {
        if (cur == d) return p;
        cur = mutate(cur, dart).result;
    }
    throw invariant_violation(
        "mutation at dart " + std::to_string(dart) + " did not return within " +
        std::to_string(bound) +
        " moves; the face-degree period law does not cover orbits that slide a "
        "dart along a loop edge");
}

bool MutationClass::contains(const CanonicalForm& form) const {
    return index_of(form) >= 0;
}

int MutationClass::index_of(const CanonicalForm& form) const {
    for (int k = 0; k < static_cast<int>(members.size()); ++k)
        if (members[k] == form) return k;
    return -1;
}

MutationClass mutation_class(const CleanDessin& d, const MutationLimits& limits) {
    MutationClass cls;
    std::map<CanonicalForm, int> index;

    const auto add = [&](const CleanDessin& m) -> int {
        CanonicalForm form = canonical_form(m);
        auto it = index.find(form);
        if (it != index.end()) return it->second;
        if (static_cast<int>(cls.members.size()) >= limits.max_class_size)
            throw resource_limit_error("mutation class exceeds " +
                                       std::to_string(limits.max_class_size) + " members");
        const int id = static_cast<int>(cls.members.size());
        cls.members.push_back(form);
        index.emplace(std::move(form), id);
        cls.representatives.push_back(m);
        cls.adjacency.emplace_back();
        if (is_generalized_star(m)) cls.star_members.push_back(id);
        return id;
    };

    add(d);
    for (int u = 0; u < static_cast<int>(cls.members.size()); ++u) {
        const CleanDessin cur = cls.representatives[u];
        for (const auto& [low, high] : cur.edges()) {
            const int v = add(mutate(cur, low).result);
            cls.adjacency[u][low] = v;
        }
    }
    return cls;
}

bool is_generalized_star(const CleanDessin& d) {
    const auto vertex_cycles = cycles(d.sigma());
    const int n_edges = d.edge_count();
    for (const auto& hub : vertex_cycles) {
        std::vector<char> met(n_edges, 0);
        int met_count = 0;
        for (int dart : hub) {
            const int e = d.edge_of_dart(dart);
            if (!met[e]) {
                met[e] = 1;
                ++met_count;
            }
        }
        if (met_count != n_edges) continue;
        int other_big = 0;
        for (const auto& cyc : vertex_cycles)
            if (&cyc != &hub && cyc.size() >= 2) ++other_big;
        if (other_big <= 1) return true;
    }
    return false;
}

std::vector<int> star_reduce(const CleanDessin& d, const MutationLimits& limits) {
    if (is_generalized_star(d)) return {};
    std::map<CanonicalForm, int> index;
    std::vector<CleanDessin> reps;
    std::vector<std::pair<int, int>> parent; // member -> (parent member, dart)

    const auto add = [&](const CleanDessin& m, int from, int dart) -> int {
        CanonicalForm form = canonical_form(m);
        auto it = index.find(form);
        if (it != index.end()) return -1;
        if (static_cast<int>(reps.size()) >= limits.max_class_size)
            throw resource_limit_error("star reduction exceeds " +
                                       std::to_string(limits.max_class_size) + " members");
        const int id = static_cast<int>(reps.size());
        index.emplace(std::move(form), id);
        reps.push_back(m);
        parent.emplace_back(from, dart);
        return id;
    };

    add(d, -1, 0);
    for (int u = 0; u < static_cast<int>(reps.size()); ++u) {
        const CleanDessin cur = reps[u];
        for (const auto& [low, high] : cur.edges()) {
            const CleanDessin next = mutate(cur, low).result;
            const int v = add(next, u, low);
            if (v < 0) continue;
            if (is_generalized_star(next)) {
                std::vector<int> path;
                for (int m = v; parent[m].first >= 0; m = parent[m].first)
                    path.push_back(parent[m].second);
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
    }
    throw invariant_violation("no generalized star found in the mutation class");
}

EquivalenceResult derived_equivalent(const CleanDessin& d1, const CleanDessin& d2,
                                     const MutationLimits& limits) {
    const Passport p1 = d1.passport();
    const Passport p2 = d2.passport();

    const auto find_path = [&]() -> std::optional<std::vector<int>> {
        if (d1.dart_count() != d2.dart_count()) return std::nullopt;
        const CanonicalForm goal = canonical_form(d2);
        std::map<CanonicalForm, int> index;
        std::vector<CleanDessin> reps;
        std::vector<std::pair<int, int>> parent;
        const auto trace = [&](int m) {
            std::vector<int> path;
            for (; parent[m].first >= 0; m = parent[m].first) path.push_back(parent[m].second);
            std::reverse(path.begin(), path.end());
            return path;
        };
        CanonicalForm start = canonical_form(d1);
        if (start == goal) return std::vector<int>{};
        index.emplace(std::move(start), 0);
        reps.push_back(d1);
        parent.emplace_back(-1, 0);
        for (int u = 0; u < static_cast<int>(reps.size()); ++u) {
            const CleanDessin cur = reps[u];
            for (const auto& [low, high] : cur.edges()) {
                const CleanDessin next = mutate(cur, low).result;
                CanonicalForm form = canonical_form(next);
                if (index.count(form)) continue;
                if (static_cast<int>(reps.size()) >= limits.max_class_size)
                    throw resource_limit_error("mutation class exceeds limit");
                const int id = static_cast<int>(reps.size());
                index.emplace(std::move(form), id);
                reps.push_back(next);
                parent.emplace_back(u, low);
                if (index.count(goal)) return trace(id);
            }
        }
        return std::nullopt;
    };

    const bool counts_match = p1.edge_count == p2.edge_count &&
                              p1.black_degrees.size() == p2.black_degrees.size() &&
                              p1.genus == p2.genus;

    // Antipov: genus 0 classes are determined by vertex count, edge count
    // and face degrees.
    if (p1.genus == 0 && p2.genus == 0 && counts_match &&
        p1.face_degrees == p2.face_degrees) {
        EquivalenceResult res;
        res.verdict = EquivalenceVerdict::EquivalentByGenus0Criterion;
        try {
            res.witness_path = find_path();
        } catch (const resource_limit_error&) {
        }
        return res;
    }

    const auto all_deg3 = [](const Passport& p) {
        return std::all_of(p.face_degrees.begin(), p.face_degrees.end(),
                           [](int d) { return d == 3; });
    };
    if (counts_match && all_deg3(p1) && all_deg3(p2)) {
        EquivalenceResult res;
        res.verdict = EquivalenceVerdict::EquivalentByTriangulation;
        try {
            res.witness_path = find_path();
        } catch (const resource_limit_error&) {
        }
        return res;
    }

    try {
        if (auto path = find_path()) {
            return {EquivalenceVerdict::EquivalentByMutationPath, std::move(path)};
        }
        return {EquivalenceVerdict::NotMutationConnected, std::nullopt};
    } catch (const resource_limit_error&) {
        return {EquivalenceVerdict::Undecided, std::nullopt};
    }
}

} // namespace dessinlab
