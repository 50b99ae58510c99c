#include "dessinlab/algebra.hpp"

#include <algorithm>
#include <map>

#include "dessinlab/linalg.hpp"

namespace dessinlab {

namespace {

// Reduction of a concatenation of two basis paths:
//   - composable only when target matches source;
//   - trivial paths act as local units;
//   - socle classes annihilate everything non-trivial;
//   - proper subpaths concatenate within one special cycle: shorter than the
//     full cycle stays proper, exactly the full cycle is the socle class of
//     its start vertex (type one), anything longer contains a type-two
//     relation and vanishes; a junction that is not cyclically consecutive
//     is a type-three relation and vanishes.
int multiply(const Quiver& q, const std::vector<BasisPath>& basis,
             const std::vector<int>& source, const std::vector<int>& target,
             const std::vector<int>& socle_base, const std::vector<int>& proper_base,
             int i, int j) {
    if (target[i] != source[j]) return -1;
    const BasisPath& a = basis[i];
    const BasisPath& b = basis[j];
    if (a.kind == BasisPath::Kind::Trivial) return j;
    if (b.kind == BasisPath::Kind::Trivial) return i;
    if (a.kind == BasisPath::Kind::Socle || b.kind == BasisPath::Kind::Socle) return -1;
    if (a.cycle != b.cycle) return -1;
    const int k = q.special_cycles()[a.cycle].length();
    if (b.start != (a.start + a.length) % k) return -1;
    const int total = a.length + b.length;
    if (total > k) return -1;
    if (total == k) return socle_base[q.arrow_at(a.cycle, a.start).source];
    return proper_base[a.cycle] + a.start * (k - 1) + (total - 1);
}

} // namespace

AlgebraTable AlgebraTable::build(const CleanDessin& d) {
    AlgebraTable t;
    t.quiver_ = Quiver::of(d);
    const Quiver& q = t.quiver_;
    const int nv = q.vertex_count();

    for (int v = 0; v < nv; ++v)
        t.basis_.push_back({BasisPath::Kind::Trivial, v, 0, 0, 0});
    t.proper_base_.assign(q.special_cycles().size(), -1);
    for (int c = 0; c < static_cast<int>(q.special_cycles().size()); ++c) {
        t.proper_base_[c] = static_cast<int>(t.basis_.size());
        const int k = q.special_cycles()[c].length();
        for (int s = 0; s < k; ++s)
            for (int len = 1; len <= k - 1; ++len)
                t.basis_.push_back({BasisPath::Kind::Proper, 0, c, s, len});
    }
    t.socle_base_.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        t.socle_base_[v] = static_cast<int>(t.basis_.size());
        t.basis_.push_back({BasisPath::Kind::Socle, v, 0, 0, 0});
    }

    const int dim = t.dim();
    t.source_.resize(dim);
    t.target_.resize(dim);
    for (int i = 0; i < dim; ++i) {
        const BasisPath& b = t.basis_[i];
        if (b.kind == BasisPath::Kind::Proper) {
            const int k = q.special_cycles()[b.cycle].length();
            t.source_[i] = q.arrow_at(b.cycle, b.start).source;
            t.target_[i] = q.arrow_at(b.cycle, (b.start + b.length - 1) % k).target;
        } else {
            t.source_[i] = t.target_[i] = b.vertex;
        }
    }

    t.table_.resize(dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            t.table_[i * dim + j] = multiply(q, t.basis_, t.source_, t.target_,
                                             t.socle_base_, t.proper_base_, i, j);
    return t;
}

int AlgebraTable::socle_index(int vertex) const { return socle_base_.at(vertex); }

std::optional<int> AlgebraTable::proper_index(int cycle, int start, int length) const {
    const int k = quiver_.special_cycles()[cycle].length();
    if (length < 1 || length > k - 1) return std::nullopt;
    return proper_base_[cycle] + start * (k - 1) + (length - 1);
}

std::vector<int> AlgebraTable::idempotent_indices() const {
    std::vector<int> out(quiver_.vertex_count());
    for (int v = 0; v < quiver_.vertex_count(); ++v) out[v] = v;
    return out;
}

std::vector<int> AlgebraTable::multiplicative_generators() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(quiver_.special_cycles().size()); ++c)
        for (int s = 0; s < quiver_.special_cycles()[c].length(); ++s)
            out.push_back(*proper_index(c, s, 1));
    if (out.empty())
        for (int v = 0; v < quiver_.vertex_count(); ++v) out.push_back(socle_base_[v]);
    return out;
}

std::vector<int> AlgebraTable::central_basis_elements() const {
    std::vector<int> out;
    for (const auto& a : quiver_.arrows()) {
        if (a.source != a.target) continue;
        const int k = quiver_.special_cycles()[a.cycle].length();
        out.push_back(*proper_index(a.cycle, (a.position + 1) % k, k - 1));
    }
    for (int v = 0; v < quiver_.vertex_count(); ++v) out.push_back(socle_base_[v]);
    return out;
}

int dim_formula(const CleanDessin& d) {
    int dim = 2 * d.edge_count();
    for (int k : cycle_type(d.sigma()))
        if (k >= 2) dim += k * (k - 1);
    return dim;
}

int center_formula(const CleanDessin& d) {
    int fixed = 0;
    for (int i = 1; i <= d.dart_count(); ++i)
        if (d.phi().apply(i) == i) ++fixed;
    return 1 + d.edge_count() + fixed;
}

CenterOracleResult center_oracle(const AlgebraTable& a) {
    const int dim = a.dim();
    std::vector<int> gens = a.idempotent_indices();
    for (int g : a.multiplicative_generators()) gens.push_back(g);

    // Rows indexed by (generator, output coordinate): commutator [z, g] = 0.
    std::map<std::pair<int, int>, linalg::SparseRow> rows;
    for (int g : gens) {
        for (int k = 0; k < dim; ++k) {
            const int zk_g = a.product(k, g);
            const int g_zk = a.product(g, k);
            if (zk_g >= 0) rows[{g, zk_g}].entries.emplace_back(k, 1);
            if (g_zk >= 0) rows[{g, g_zk}].entries.emplace_back(k, -1);
        }
    }
    std::vector<linalg::SparseRow> mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));

    CenterOracleResult res;
    res.basis = linalg::nullspace_basis(mat, dim);
    res.dimension = static_cast<int>(res.basis.size());
    return res;
}

int hh1_formula(const CleanDessin& d) {
    if (Quiver::of(d).arrows().empty())
        throw formula_not_applicable("empty quiver");
    const Passport p = d.passport();
    int f1 = 0, f2 = 0;
    for (int deg : p.face_degrees) {
        if (deg == 1) ++f1;
        if (deg == 2) ++f2;
    }
    return 2 - static_cast<int>(p.black_degrees.size()) + p.edge_count + f1 + f2;
}

int hh1_oracle(const AlgebraTable& a, const Hh1OracleLimits& limits) {
    const int dim = a.dim();
    if (dim > limits.max_dim)
        throw resource_limit_error("hh1_oracle: algebra dimension " + std::to_string(dim) +
                                   " exceeds bound " + std::to_string(limits.max_dim));

    // Unknowns: for every non-trivial basis path b, the coordinates of D(b)
    // within the bimodule component e_{s(b)} A e_{t(b)}; D(e_v) = 0.
    std::vector<std::vector<int>> component(dim); // basis index -> members of its component
    for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c)
            if (a.source(c) == a.source(b) && a.target(c) == a.target(b))
                component[b].push_back(c);

    std::map<std::pair<int, int>, int> unknown; // (b, c) -> column
    int columns = 0;
    for (int b = 0; b < dim; ++b) {
        if (a.basis()[b].kind == BasisPath::Kind::Trivial) continue;
        for (int c : component[b]) unknown[{b, c}] = columns++;
    }

    const auto d_of = [&](int b) -> std::vector<std::pair<int, int>> {
        // D(b) as (basis coordinate, column) pairs; empty for trivial paths.
        std::vector<std::pair<int, int>> out;
        if (a.basis()[b].kind == BasisPath::Kind::Trivial) return out;
        for (int c : component[b]) out.emplace_back(c, unknown.at({b, c}));
        return out;
    };

    // Leibniz rows D(g b) - D(g) b - g D(b) = 0 for every multiplicative
    // generator g and non-trivial basis path b; pairs with idempotents are
    // satisfied identically by the component restriction.
    std::map<std::pair<std::pair<int, int>, int>, linalg::SparseRow> rows;
    const auto add = [&](std::pair<int, int> eq, int coord, int col, long long v) {
        rows[{eq, coord}].entries.emplace_back(col, v);
    };
    for (int g : a.multiplicative_generators()) {
        for (int b = 0; b < dim; ++b) {
            if (a.basis()[b].kind == BasisPath::Kind::Trivial) continue;
            const std::pair<int, int> eq{g, b};
            const int gb = a.product(g, b);
            if (gb >= 0)
                for (const auto& [coord, col] : d_of(gb)) add(eq, coord, col, 1);
            for (const auto& [c, col] : d_of(g)) {
                const int cb = a.product(c, b);
                if (cb >= 0) add(eq, cb, col, -1);
            }
            for (const auto& [c, col] : d_of(b)) {
                const int gc = a.product(g, c);
                if (gc >= 0) add(eq, gc, col, -1);
            }
        }
    }
    std::vector<linalg::SparseRow> mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));

    const int dim_der_e = columns - linalg::rank(mat, columns);
    int dim_a_e = 0;
    for (int b = 0; b < dim; ++b)
        if (a.source(b) == a.target(b)) ++dim_a_e;
    const int dim_z = center_oracle(a).dimension;

    // dim Der = dim Der_E + dim A - dim A_E; dim Inn = dim A - dim Z.
    const int hh1 = dim_der_e - dim_a_e + dim_z;
    if (hh1 < 0)
        throw invariant_violation("hh1_oracle produced a negative dimension");
    return hh1;
}

GreenWalk green_walk(const CleanDessin& d, int dart) {
    if (dart < 1 || dart > d.dart_count())
        throw validation_error("dart index " + std::to_string(dart) + " out of range");
    GreenWalk w;
    w.start = dart;
    int x = dart;
    do {
        w.darts.push_back(x);
        x = d.phi().apply(x);
    } while (x != dart);
    return w;
}

std::vector<int> tube_ranks(const CleanDessin& d) {
    std::vector<int> ranks;
    for (int deg : cycle_type(d.phi())) {
        if (deg % 2 == 1) {
            ranks.push_back(deg);
        } else {
            ranks.push_back(deg / 2);
            ranks.push_back(deg / 2);
        }
    }
    std::sort(ranks.begin(), ranks.end(), std::greater<>());
    if (ranks != cycle_type(compose(d.phi(), d.phi())))
        throw invariant_violation("tube ranks disagree with the cycle type of phi^2");
    return ranks;
}

InvariantReport compute_report(const CleanDessin& d, bool with_oracles) {
    InvariantReport r;
    r.n = d.edge_count();
    r.passport = d.passport();
    r.dim_lambda = dim_formula(d);
    r.dim_center = center_formula(d);
    try {
        r.dim_hh1 = hh1_formula(d);
    } catch (const formula_not_applicable& e) {
        r.dim_hh1_reason = e.reason;
    }
    r.tube_ranks = tube_ranks(d);
    for (int i = 1; i <= d.dart_count(); ++i)
        if (d.phi().apply(i) == i) ++r.loop_arrows;

    if (with_oracles) {
        const AlgebraTable a = AlgebraTable::build(d);
        InvariantReport::Oracles o;
        o.dim_lambda = a.dim();
        o.dim_center = center_oracle(a).dimension;
        try {
            o.dim_hh1 = hh1_oracle(a);
        } catch (const resource_limit_error&) {
            o.dim_hh1.reset();
        }
        o.tube_ranks = cycle_type(compose(d.phi(), d.phi()));
        r.oracles = std::move(o);
    }
    return r;
}

} // namespace dessinlab
