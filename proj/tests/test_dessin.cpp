#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dessinlab/dessin.hpp"
#include "test_support.hpp"

using namespace dessinlab;
using testsupport::perm;

TEST_CASE("make derives phi and validates") {
    const auto d = testsupport::running_example();
    CHECK(d.phi() == perm(8, {{1, 3, 7, 6, 2}, {4, 5}}));

    // sigma = (1 2) with alpha = (1 2): single loop, phi = identity.
    const auto loop = testsupport::single_loop();
    CHECK(loop.phi().is_identity());
    CHECK(loop.passport().face_degrees == std::vector<int>{1, 1});

    // single segment: one face of degree 2.
    const auto seg = testsupport::single_edge();
    CHECK(seg.phi() == perm(2, {{1, 2}}));
    CHECK(seg.passport().face_degrees == std::vector<int>{2});

    CHECK_THROWS_WITH_AS(CleanDessin::make(Permutation::identity(4),
                                           perm(4, {{1, 2, 3, 4}})),
                         doctest::Contains("fixed-point-free involution"),
                         validation_error);
    CHECK_THROWS_WITH_AS(CleanDessin::make(Permutation::identity(4),
                                           perm(4, {{1, 2}, {3, 4}})),
                         doctest::Contains("transitive"), validation_error);
}

TEST_CASE("passport") {
    const auto d = testsupport::running_example();
    const Passport p = d.passport();
    CHECK(p.black_degrees == std::vector<int>{4, 3, 1});
    CHECK(p.face_degrees == std::vector<int>{5, 2, 1});
    CHECK(p.edge_count == 4);
    CHECK(p.genus == 0);

    const Passport seg = testsupport::single_edge().passport();
    CHECK(seg.black_degrees == std::vector<int>{1, 1});
    CHECK(seg.face_degrees == std::vector<int>{2});
    CHECK(seg.genus == 0);

    const Passport de = testsupport::double_edge().passport();
    CHECK(de.face_degrees == std::vector<int>{2, 2});
    CHECK(de.genus == 0);
}

TEST_CASE("classify_edge") {
    const auto d = testsupport::running_example();
    const EdgeRef e1 = d.classify_edge(1);
    CHECK(e1.dart_low == 1);
    CHECK(e1.dart_high == 2);
    CHECK(e1.leaf);
    CHECK_FALSE(e1.loop);
    CHECK_FALSE(e1.trivial_loop);

    const EdgeRef e7 = d.classify_edge(7);
    CHECK(e7.loop);
    CHECK(e7.trivial_loop);
    CHECK_FALSE(e7.leaf);

    const EdgeRef e3 = d.classify_edge(3);
    CHECK_FALSE(e3.leaf);
    CHECK_FALSE(e3.loop);
    CHECK_FALSE(e3.trivial_loop);

    CHECK_THROWS_AS(d.classify_edge(9), validation_error);
}

TEST_CASE("canonical form is a conjugation invariant") {
    const auto d = testsupport::running_example();
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_permutation(8, rng);
        const auto dg = conjugate(d, g);
        CHECK(canonical_form(dg) == canonical_form(d));
        CHECK(dg.passport() == d.passport());
    }
    // the two one-edge dessins are distinct
    CHECK(canonical_form(testsupport::single_edge()) !=
          canonical_form(testsupport::single_loop()));
}

TEST_CASE("isomorphic paths with different labelings") {
    // both are 3-edge paths; g = (1 2)(5 6) carries one to the other
    const auto a = CleanDessin::make(perm(6, {{2, 3}, {4, 5}}),
                                     perm(6, {{1, 2}, {3, 4}, {5, 6}}));
    const auto b = CleanDessin::make(perm(6, {{1, 3}, {4, 6}}),
                                     perm(6, {{1, 2}, {3, 4}, {5, 6}}));
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(is_isomorphic(a, b));
    const auto g = find_conjugator(a, b);
    REQUIRE(g.has_value());
    CHECK(conjugate(a.sigma(), *g) == b.sigma());
    CHECK(conjugate(a.alpha(), *g) == b.alpha());
}

TEST_CASE("dessin_from_canonical rebuilds the class representative") {
    const auto d = testsupport::running_example();
    const auto rebuilt = dessin_from_canonical(canonical_form(d));
    CHECK(is_isomorphic(rebuilt, d));
    CHECK(canonical_form(rebuilt) == canonical_form(d));
}

TEST_CASE("enumerate_dessins") {
    CHECK(enumerate_dessins(1).size() == 2);

    PassportFilter f;
    f.genus = 0;
    f.face_degrees = std::vector<int>{2, 2};
    CHECK(enumerate_dessins(2, f).size() == 1);

    // Genus 1, 3 black vertices, 4 edges, one face: 11 classes in all, and
    // exactly two once the vertex degrees are matched to {4,3,1} (the pair
    // whose mutation classes are disjoint; see test_mutation).
    PassportFilter coarse;
    coarse.genus = 1;
    coarse.black_count = 3;
    coarse.face_count = 1;
    CHECK(enumerate_dessins(4, coarse).size() == 11);
    PassportFilter matched = coarse;
    matched.black_degrees = std::vector<int>{4, 3, 1};
    CHECK(enumerate_dessins(4, matched).size() == 2);

    CHECK_THROWS_AS(enumerate_dessins(6), resource_limit_error);
}

TEST_CASE("enumeration is duplicate-free and closed under conjugation") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const auto classes = enumerate_dessins(n);
        std::set<CanonicalForm> forms;
        for (const auto& d : classes) {
            const Passport p = d.passport();
            CHECK(2 - 2 * p.genus ==
                  static_cast<int>(p.black_degrees.size()) - p.edge_count +
                      static_cast<int>(p.face_degrees.size()));
            CHECK(forms.insert(canonical_form(d)).second);
        }
        for (const auto& d : classes) {
            const auto g = random_permutation(2 * n, rng);
            CHECK(forms.count(canonical_form(conjugate(d, g))));
        }
    }
}

TEST_CASE("clean_cover") {
    // cover of the running example: whites of degree 2 become black
    const auto d = testsupport::running_example();
    const auto cover = clean_cover(d.sigma(), d.alpha());
    CHECK(cover.edge_count() == 8);
    CHECK(cover.passport().black_degrees == std::vector<int>{4, 3, 2, 2, 2, 2, 1});

    // alpha may be an arbitrary permutation, here the identity
    const auto c2 = clean_cover(perm(2, {{1, 2}}), Permutation::identity(2));
    CHECK(c2.edge_count() == 2);
    CHECK(c2.passport().black_degrees == std::vector<int>{2, 1, 1});

    // subdividing a single segment gives the 2-edge path
    const auto c3 = clean_cover(Permutation::identity(2), perm(2, {{1, 2}}));
    CHECK(c3.edge_count() == 2);
    CHECK(c3.passport().black_degrees == std::vector<int>{2, 1, 1});

    CHECK_THROWS_AS(clean_cover(Permutation::identity(4), perm(4, {{1, 2}, {3, 4}})),
                    validation_error);
}

TEST_CASE("triangulate") {
    const auto seg = testsupport::single_edge();
    const auto t1 = triangulate(seg);
    CHECK(t1.edge_count() == 6);
    CHECK(t1.passport().black_degrees.size() == 4);
    CHECK(t1.passport().face_degrees == std::vector<int>(4, 3));
    CHECK(t1.passport().genus == 0);

    const auto d = testsupport::running_example();
    const auto t2 = triangulate(d);
    CHECK(t2.edge_count() == 24);
    CHECK(t2.passport().black_degrees.size() == 10);
    CHECK(t2.passport().face_degrees == std::vector<int>(16, 3));
    CHECK(t2.passport().genus == 0);

    for (const auto& m : enumerate_dessins(2)) {
        const auto t = triangulate(m);
        const Passport before = m.passport();
        const Passport after = t.passport();
        CHECK(t.edge_count() == 6 * m.edge_count());
        CHECK(static_cast<int>(after.black_degrees.size()) ==
              static_cast<int>(before.black_degrees.size()) + m.edge_count() +
                  static_cast<int>(before.face_degrees.size()));
        CHECK(after.face_degrees == std::vector<int>(4 * m.edge_count(), 3));
        CHECK(after.genus == before.genus);
    }
}

TEST_CASE("random_dessin is seeded and valid") {
    const auto a = random_dessin(4, 123);
    const auto b = random_dessin(4, 123);
    CHECK(a == b);
    CHECK(a.edge_count() == 4);
    CHECK(is_fpf_involution(a.alpha()));
    CHECK(compose(compose(a.sigma(), a.alpha()), a.phi()).is_identity());
}
