#pragma once

// Cycle-notation parsing and formatting, the dessin document format, JSON
// reports and DOT export.
//
// Grammar:  permutation := cycle* ;  cycle := '(' int (ws int)* ')'
// Points are 1-based, each at most once; omitted points are fixed.
//
// Document format: UTF-8 key-value lines with '#' comments,
//   n: <edge count>        (required)
//   sigma: <cycles>        (required; empty value means the identity)
//   alpha: <cycles>        (optional; defaults to (1 2)(3 4)...)
//   name: <text>           (optional)

#include <optional>
#include <string>

#include "dessinlab/algebra.hpp"
#include "dessinlab/dessin.hpp"
#include "dessinlab/permutation.hpp"
#include "dessinlab/quiver.hpp"

namespace dessinlab {

Permutation parse_permutation(const std::string& text, int domain_size);

// Canonical cycle notation: cycles start at their minimum and are sorted by
// minimum; fixed points are printed only when requested.
std::string format_permutation(const Permutation& p, bool include_fixed = false);

struct DessinDocument {
    int n = 0;
    std::string sigma_text;
    std::optional<std::string> alpha_text;
    std::optional<std::string> name;

    Permutation sigma() const;
    Permutation alpha() const;
    CleanDessin to_dessin() const;
};

DessinDocument parse_document(const std::string& text);
std::string format_document(const CleanDessin& d, const std::optional<std::string>& name = {});

// JSON report; exact integers only, byte-identical for identical inputs.
std::string report_json(const InvariantReport& r, const std::string& digest);
std::string report_text(const InvariantReport& r, const std::string& digest);

// Bipartite multigraph with black/white node styles; rotation order is an
// explicit edge attribute.
std::string export_dot(const CleanDessin& d);
// Digraph with special-cycle coloring.
std::string export_dot(const Quiver& q);

} // namespace dessinlab
