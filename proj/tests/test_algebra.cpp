#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "dessinlab/algebra.hpp"
#include "dessinlab/linalg.hpp"
#include "test_support.hpp"

using namespace dessinlab;

namespace {

// Independent cross-oracle: the full Leibniz system over generator x basis
// pairs with an unconstrained linear endomorphism D (dim^2 unknowns), i.e.
// dim Der without any normalization, followed by dim Inn = dim A - dim Z.
// Tractable only for small algebras; used to validate hh1_oracle's
// normalized computation.
int hh1_naive(const AlgebraTable& a) {
    const int dim = a.dim();
    const auto col = [&](int b, int c) { return b * dim + c; };
    std::vector<int> gens = a.idempotent_indices();
    for (int g : a.multiplicative_generators()) gens.push_back(g);

    std::map<std::pair<std::pair<int, int>, int>, linalg::SparseRow> rows;
    const auto add = [&](std::pair<int, int> eq, int coord, int column, long long v) {
        rows[{eq, coord}].entries.emplace_back(column, v);
    };
    for (int g : gens) {
        for (int b = 0; b < dim; ++b) {
            const std::pair<int, int> eq{g, b};
            const int gb = a.product(g, b);
            if (gb >= 0)
                for (int c = 0; c < dim; ++c) add(eq, c, col(gb, c), 1);
            for (int c = 0; c < dim; ++c) {
                const int cb = a.product(c, b);
                if (cb >= 0) add(eq, cb, col(g, c), -1);
                const int gc = a.product(g, c);
                if (gc >= 0) add(eq, gc, col(b, c), -1);
            }
        }
    }
    std::vector<linalg::SparseRow> mat;
    for (auto& [k, r] : rows) mat.push_back(std::move(r));
    const int dim_der = dim * dim - linalg::rank(mat, dim * dim);
    const int dim_inn = dim - center_oracle(a).dimension;
    return dim_der - dim_inn;
}

} // namespace

TEST_CASE("dimension formula and basis enumeration") {
    const auto d = testsupport::running_example();
    CHECK(dim_formula(d) == 26);
    CHECK(AlgebraTable::build(d).dim() == 26);

    CHECK(dim_formula(testsupport::single_edge()) == 2);
    CHECK(AlgebraTable::build(testsupport::single_edge()).dim() == 2);

    CHECK(dim_formula(testsupport::double_edge()) == 8);
    CHECK(AlgebraTable::build(testsupport::double_edge()).dim() == 8);
}

TEST_CASE("multiplication table closes and respects units") {
    std::mt19937_64 rng(99);
    for (const auto& d : {testsupport::running_example(), testsupport::double_edge(),
                          testsupport::single_loop(), testsupport::loop_with_pendant(),
                          testsupport::single_edge()}) {
        const AlgebraTable a = AlgebraTable::build(d);
        const int dim = a.dim();
        // products are 0 or a basis path with matching endpoints
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                const int p = a.product(i, j);
                if (p < 0) continue;
                CHECK(p < dim);
                CHECK(a.source(p) == a.source(i));
                CHECK(a.target(p) == a.target(j));
            }
        }
        // unit laws: exactly one idempotent acts as a left and right unit
        for (int i = 0; i < dim; ++i) {
            for (int v : a.idempotent_indices()) {
                CHECK(a.product(v, i) == (a.source(i) == v ? i : -1));
                CHECK(a.product(i, v) == (a.target(i) == v ? i : -1));
            }
        }
        // associativity on random triples
        for (int t = 0; t < 200; ++t) {
            const int i = static_cast<int>(rng() % dim);
            const int j = static_cast<int>(rng() % dim);
            const int k = static_cast<int>(rng() % dim);
            const int ij = a.product(i, j);
            const int jk = a.product(j, k);
            const int left = ij < 0 ? -1 : a.product(ij, k);
            const int right = jk < 0 ? -1 : a.product(i, jk);
            CHECK(left == right);
        }
    }
}

TEST_CASE("convention algebra of the single edge") {
    const AlgebraTable a = AlgebraTable::build(testsupport::single_edge());
    REQUIRE(a.dim() == 2);
    const int e = a.trivial_index(0);
    const int x = a.socle_index(0);
    CHECK(a.product(e, e) == e);
    CHECK(a.product(e, x) == x);
    CHECK(a.product(x, e) == x);
    CHECK(a.product(x, x) == -1); // x^2 = 0
}

TEST_CASE("every full rotation multiplies to the socle of its start vertex") {
    for (const auto& d : {testsupport::running_example(), testsupport::double_edge(),
                          testsupport::single_loop()}) {
        const AlgebraTable a = AlgebraTable::build(d);
        const Quiver& q = a.quiver();
        for (int c = 0; c < static_cast<int>(q.special_cycles().size()); ++c) {
            const int k = q.special_cycles()[c].length();
            for (int s = 0; s < k; ++s) {
                int acc = *a.proper_index(c, s, 1);
                for (int t = 1; t < k; ++t)
                    acc = a.product(acc, *a.proper_index(c, (s + t) % k, 1));
                CHECK(acc == a.socle_index(q.arrow_at(c, s).source));
            }
        }
    }
}

TEST_CASE("center formula and oracle") {
    const auto d = testsupport::running_example();
    CHECK(center_formula(d) == 6);
    CHECK(center_oracle(AlgebraTable::build(d)).dimension == 6);

    // single edge: the whole 2-dimensional algebra is commutative
    CHECK(center_formula(testsupport::single_edge()) == 2);
    CHECK(center_oracle(AlgebraTable::build(testsupport::single_edge())).dimension == 2);

    // single loop: 1 + |Q_0| + 2 = 4 = dim, again commutative
    CHECK(center_formula(testsupport::single_loop()) == 4);
    CHECK(center_oracle(AlgebraTable::build(testsupport::single_loop())).dimension == 4);

    CHECK(center_formula(testsupport::double_edge()) == 3);
    CHECK(center_oracle(AlgebraTable::build(testsupport::double_edge())).dimension == 3);
}

TEST_CASE("the center basis elements are central") {
    for (const auto& d : {testsupport::running_example(), testsupport::single_loop(),
                          testsupport::loop_with_pendant(), testsupport::double_edge()}) {
        const AlgebraTable a = AlgebraTable::build(d);
        const auto elements = a.central_basis_elements();
        // together with the identity they account for the full center
        CHECK(1 + static_cast<int>(elements.size()) == center_oracle(a).dimension);
        for (int z : elements) {
            for (int i = 0; i < a.dim(); ++i)
                CHECK(a.product(z, i) == a.product(i, z));
        }
    }
    // the loop arrow itself is not central once its cycle has length >= 3:
    // composing with its cyclic successor is nonzero in one order only
    const AlgebraTable a = AlgebraTable::build(testsupport::running_example());
    const Quiver& q = a.quiver();
    for (const auto& ar : q.arrows()) {
        if (ar.source != ar.target) continue;
        const int k = q.special_cycles()[ar.cycle].length();
        const int loop_arrow = *a.proper_index(ar.cycle, ar.position, 1);
        const int succ = *a.proper_index(ar.cycle, (ar.position + 1) % k, 1);
        CHECK(a.product(loop_arrow, succ) >= 0);
        CHECK(a.product(succ, loop_arrow) == -1);
    }
}

TEST_CASE("products of non-identity center basis elements") {
    // For the running example every pairwise product vanishes.
    const AlgebraTable a = AlgebraTable::build(testsupport::running_example());
    for (int p : a.central_basis_elements())
        for (int q : a.central_basis_elements())
            CHECK(a.product(p, q) == -1);

    // The single-loop dessin is a genuine counterexample to that vanishing:
    // the two loop contributions are the loop arrows themselves and their
    // product is the socle class, not zero (the algebra is k[x,y]/(x^2,y^2)).
    const AlgebraTable loop = AlgebraTable::build(testsupport::single_loop());
    const auto basis = loop.central_basis_elements();
    REQUIRE(basis.size() == 3); // two loop contributions and one socle class
    const int x = basis[0], y = basis[1];
    CHECK(loop.product(x, y) == loop.socle_index(0));
    CHECK(loop.product(y, x) == loop.socle_index(0));
    CHECK(loop.product(x, x) == -1);
    CHECK(loop.product(y, y) == -1);
}

TEST_CASE("hh1 formula and oracle") {
    const auto d = testsupport::running_example();
    CHECK(hh1_formula(d) == 5);
    CHECK(hh1_oracle(AlgebraTable::build(d)) == 5);

    // single edge: the formula does not apply (empty quiver); the direct
    // derivation computation gives 1.
    CHECK_THROWS_AS(hh1_formula(testsupport::single_edge()), formula_not_applicable);
    CHECK(hh1_oracle(AlgebraTable::build(testsupport::single_edge())) == 1);

    CHECK(hh1_formula(testsupport::double_edge()) == 4);
    CHECK(hh1_oracle(AlgebraTable::build(testsupport::double_edge())) == 4);

    CHECK(hh1_formula(testsupport::single_loop()) == 4);
    CHECK(hh1_oracle(AlgebraTable::build(testsupport::single_loop())) == 4);

    CHECK(hh1_formula(testsupport::loop_with_pendant()) == 3);
    CHECK(hh1_oracle(AlgebraTable::build(testsupport::loop_with_pendant())) == 3);

    Hh1OracleLimits tight;
    tight.max_dim = 4;
    CHECK_THROWS_AS(hh1_oracle(AlgebraTable::build(d), tight), resource_limit_error);
}

TEST_CASE("normalized derivation count agrees with the unconstrained solve") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& d : enumerate_dessins(n)) {
            const AlgebraTable a = AlgebraTable::build(d);
            CHECK(hh1_oracle(a) == hh1_naive(a));
        }
    }
}

TEST_CASE("green walks") {
    const auto d = testsupport::running_example();
    const GreenWalk w1 = green_walk(d, 1);
    CHECK(w1.darts == std::vector<int>{1, 3, 7, 6, 2});
    CHECK(w1.period() == 5);
    const GreenWalk w8 = green_walk(d, 8);
    CHECK(w8.darts == std::vector<int>{8});
    CHECK(w8.period() == 1);
    // a dart and its phi-image generate the same walk up to rotation
    const GreenWalk w3 = green_walk(d, 3);
    std::vector<int> rotated = w1.darts;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(w3.darts == rotated);
    CHECK_THROWS_AS(green_walk(d, 0), validation_error);
}

TEST_CASE("tube ranks") {
    CHECK(tube_ranks(testsupport::running_example()) == std::vector<int>{5, 1, 1, 1});
    CHECK(tube_ranks(testsupport::double_edge()) == std::vector<int>{1, 1, 1, 1});
    // all-odd faces keep their degrees
    const auto loop_pendant = testsupport::loop_with_pendant(); // faces {3,1}
    CHECK(tube_ranks(loop_pendant) == std::vector<int>{3, 1});
}

TEST_CASE("invariant report") {
    const InvariantReport r = compute_report(testsupport::running_example(), true);
    CHECK(r.dim_lambda == 26);
    CHECK(r.dim_center == 6);
    REQUIRE(r.dim_hh1.has_value());
    CHECK(*r.dim_hh1 == 5);
    CHECK(r.tube_ranks == std::vector<int>{5, 1, 1, 1});
    CHECK(r.loop_arrows == 1);
    REQUIRE(r.oracles.has_value());
    CHECK(r.oracles->dim_lambda == 26);
    CHECK(r.oracles->dim_center == 6);
    CHECK(r.oracles->dim_hh1 == 5);
    CHECK(r.oracles->tube_ranks == r.tube_ranks);

    const InvariantReport seg = compute_report(testsupport::single_edge(), true);
    CHECK_FALSE(seg.dim_hh1.has_value());
    CHECK(seg.dim_hh1_reason == "empty quiver");
    CHECK(seg.oracles->dim_hh1 == 1); // exposed, never silently reconciled
}
