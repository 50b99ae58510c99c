#include <doctest.h>

#include <random>

#include "dessinlab/io.hpp"
#include "test_support.hpp"

using namespace dessinlab;
using testsupport::perm;

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("(2 5 3)(4 6 8 7)", 8) == perm(8, {{2, 5, 3}, {4, 6, 8, 7}}));
    CHECK(parse_permutation("", 4) == Permutation::identity(4));
    CHECK(parse_permutation("  (1 2)  (3 4) ", 4) == perm(4, {{1, 2}, {3, 4}}));

    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), parse_error);
    try {
        parse_permutation("(1 2)(2 3)", 4);
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7); // the second 2
    }
    CHECK_THROWS_AS(parse_permutation("(9)", 8), parse_error);
    CHECK_THROWS_AS(parse_permutation("(0)", 8), parse_error);
    CHECK_THROWS_AS(parse_permutation("(1 2", 4), parse_error);
    CHECK_THROWS_AS(parse_permutation("()", 4), parse_error);
    CHECK_THROWS_AS(parse_permutation("1 2", 4), parse_error);
}

TEST_CASE("format round trips") {
    CHECK(format_permutation(perm(8, {{2, 5, 3}, {4, 6, 8, 7}})) == "(2 5 3)(4 6 8 7)");
    CHECK(format_permutation(perm(8, {{1, 3, 7, 6, 2}, {4, 5}}), true) ==
          "(1 3 7 6 2)(4 5)(8)");
    CHECK(format_permutation(Permutation::identity(3)) == "");

    std::mt19937_64 rng(31);
    for (int domain = 1; domain <= 12; ++domain) {
        for (int t = 0; t < 90; ++t) {
            const auto p = random_permutation(domain, rng);
            CHECK(parse_permutation(format_permutation(p), domain) == p);
            CHECK(parse_permutation(format_permutation(p, true), domain) == p);
            // formatting is canonical
            CHECK(format_permutation(parse_permutation(format_permutation(p), domain)) ==
                  format_permutation(p));
        }
    }
}

TEST_CASE("dessin documents") {
    const std::string text =
        "# running example\n"
        "name: sample\n"
        "n: 4\n"
        "sigma: (2 5 3)(4 6 8 7)\n"
        "alpha: (1 2)(3 4)(5 6)(7 8)\n";
    const DessinDocument doc = parse_document(text);
    CHECK(doc.n == 4);
    CHECK(doc.name == "sample");
    const CleanDessin d = doc.to_dessin();
    CHECK(d.phi() == perm(8, {{1, 3, 7, 6, 2}, {4, 5}}));

    // alpha defaults to the consecutive pairing
    const DessinDocument bare = parse_document("n: 4\nsigma: (2 5 3)(4 6 8 7)\n");
    CHECK(bare.to_dessin() == d);

    // an explicitly empty alpha is the identity (useful for clean covers),
    // distinct from an absent one
    const DessinDocument empty_alpha = parse_document("n: 1\nsigma: (1 2)\nalpha:\n");
    CHECK(empty_alpha.alpha() == Permutation::identity(2));

    CHECK_THROWS_AS(parse_document("sigma: (1 2)\n"), parse_error);
    CHECK_THROWS_AS(parse_document("n: 1\n"), parse_error);
    CHECK_THROWS_AS(parse_document("n: x\nsigma:\n"), parse_error);
    CHECK_THROWS_AS(parse_document("n: 1\nsigma:\nbogus: 1\n"), parse_error);

    // round trip through format_document
    const CleanDessin back = parse_document(format_document(d)).to_dessin();
    CHECK(back == d);
}

TEST_CASE("json report") {
    const auto d = testsupport::running_example();
    const InvariantReport r = compute_report(d, true);
    const std::string digest = canonical_digest(d);
    const std::string json = report_json(r, digest);
    CHECK(json.find("\"dim_lambda\": 26") != std::string::npos);
    CHECK(json.find("\"dim_center\": 6") != std::string::npos);
    CHECK(json.find("\"dim_hh1\": 5") != std::string::npos);
    CHECK(json.find("\"tube_ranks\": [") != std::string::npos);
    CHECK(json.find("\"oracles\"") != std::string::npos);
    // determinism
    CHECK(report_json(compute_report(d, true), canonical_digest(d)) == json);

    const InvariantReport seg = compute_report(testsupport::single_edge(), false);
    const std::string seg_json = report_json(seg, canonical_digest(testsupport::single_edge()));
    CHECK(seg_json.find("\"dim_hh1\": null") != std::string::npos);
    CHECK(seg_json.find("\"dim_hh1_reason\": \"empty quiver\"") != std::string::npos);
}

TEST_CASE("digest is stable across relabelings") {
    const auto d = testsupport::running_example();
    std::mt19937_64 rng(8);
    const auto g = random_permutation(8, rng);
    CHECK(canonical_digest(conjugate(d, g)) == canonical_digest(d));
    CHECK(canonical_digest(d).size() == 16);
}

TEST_CASE("dot export") {
    const auto d = testsupport::running_example();
    const std::string dot = export_dot(d);
    CHECK(dot.find("graph dessin {") == 0);
    // 3 black nodes, 4 white nodes, 8 half-edge lines
    int blacks = 0, whites = 0, links = 0;
    for (size_t pos = 0; (pos = dot.find("  b", pos)) != std::string::npos; ++pos) ++blacks;
    for (size_t pos = 0; (pos = dot.find("  w", pos)) != std::string::npos; ++pos) ++whites;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++links;
    CHECK(blacks == 3 + 8); // node declarations plus one endpoint per half-edge
    CHECK(whites == 4);
    CHECK(links == 8);
    CHECK(dot.find("rot=") != std::string::npos);
    CHECK(export_dot(d) == dot);

    const std::string seg = export_dot(testsupport::single_edge());
    int seg_links = 0;
    for (size_t pos = 0; (pos = seg.find(" -- ", pos)) != std::string::npos; ++pos)
        ++seg_links;
    CHECK(seg_links == 2);

    const std::string qdot = export_dot(Quiver::of(d));
    CHECK(qdot.find("digraph quiver {") == 0);
    int arrows = 0;
    for (size_t pos = 0; (pos = qdot.find(" -> ", pos)) != std::string::npos; ++pos) ++arrows;
    CHECK(arrows == 7);
}
