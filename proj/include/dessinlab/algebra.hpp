#pragma once

// Exact arithmetic in the Brauer graph algebra of a clean dessin over the
// rationals, the closed invariant formulas, and independent oracles for each
// (basis enumeration, center nullspace, derivation space, phi^2 cycle type).

#include <optional>
#include <string>
#include <vector>

#include "dessinlab/dessin.hpp"
#include "dessinlab/quiver.hpp"

namespace dessinlab {

struct BasisPath {
    enum class Kind { Trivial, Proper, Socle };
    Kind kind = Kind::Trivial;
    int vertex = 0; // Trivial/Socle: quiver vertex
    int cycle = 0;  // Proper: special cycle
    int start = 0;  // Proper: rotation start position
    int length = 0; // Proper: 1..k-1
};

// Multiplication table of the Brauer graph algebra on its monomial basis:
// the trivial path and the socle class of every quiver vertex plus all
// proper subpaths of special cycles. The product of two basis paths is 0 or
// another basis path, so the table stores indices (-1 for zero); the exact
// rational structure constants are therefore all 0 or 1.
//
// The single-edge dessin has an empty quiver; its table is the convention
// algebra {1, x} with x^2 = 0.
class AlgebraTable {
public:
    static AlgebraTable build(const CleanDessin& d);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    const Quiver& quiver() const { return quiver_; }

    // Index of the product basis element, or -1 when the product is zero.
    int product(int i, int j) const { return table_[i * dim() + j]; }

    int source(int i) const { return source_[i]; }
    int target(int i) const { return target_[i]; }

    int trivial_index(int vertex) const { return vertex; }
    int socle_index(int vertex) const;
    std::optional<int> proper_index(int cycle, int start, int length) const;

    // Basis indices of the idempotents e_v.
    std::vector<int> idempotent_indices() const;
    // Basis indices of the arrows (proper length-1 paths); for the empty
    // quiver this falls back to the socle generator x of the convention
    // algebra, so that idempotents + these always generate the algebra.
    std::vector<int> multiplicative_generators() const;

    // The non-identity elements of the center basis: one socle class per
    // quiver vertex plus, for every loop arrow, the path complementary to
    // it inside its special cycle (a loop path of length k-1 at the same
    // vertex; for a degree-2 loop vertex this is the other loop arrow).
    // The loop arrow itself is not central once k >= 3.
    std::vector<int> central_basis_elements() const;

private:
    Quiver quiver_;
    std::vector<BasisPath> basis_;
    std::vector<int> table_;
    std::vector<int> source_, target_;
    std::vector<int> socle_base_;  // vertex -> basis index
    std::vector<int> proper_base_; // cycle -> first proper index
};

// 2|Q_0| + sum over black vertices of degree k >= 2 of k(k-1).
int dim_formula(const CleanDessin& d);

// 1 + |Q_0| + #(degree-1 faces); the loop-arrow count is the number of
// fixed points of phi.
int center_formula(const CleanDessin& d);

struct CenterOracleResult {
    int dimension = 0;
    // Center basis vectors in basis-path coordinates, integer-scaled.
    std::vector<std::vector<long long>> basis;
};

// Exact nullspace of z -> ([z, g]) over the idempotent and arrow generators.
CenterOracleResult center_oracle(const AlgebraTable& a);

// 2 - V + E + #(faces of degree 1) + #(faces of degree 2).
// Throws formula_not_applicable for the empty-quiver dessin.
int hh1_formula(const CleanDessin& d);

struct Hh1OracleLimits {
    int max_dim = 64;
};

// dim HH^1 = dim Der - dim Inn over the rationals, by exact linear algebra
// on the multiplication table. Derivations are computed in the normalized
// form D(e_v) = 0 (every derivation is inner-equivalent to one), which keeps
// the Leibniz system small; the unnormalized count is recovered exactly via
// dim Der = dim Der_E + dim A - dim A_E.
int hh1_oracle(const AlgebraTable& a, const Hh1OracleLimits& limits = {});

struct GreenWalk {
    int start = 0;
    std::vector<int> darts; // (i, i^phi, ..., i^{phi^-1})
    int period() const { return static_cast<int>(darts.size()); }
};

GreenWalk green_walk(const CleanDessin& d, int dart);

// Exceptional tube ranks from the face degrees: a face of odd degree d
// yields one tube of rank d, a face of even degree 2d yields two of rank d.
// Asserted equal to cycle_type(phi^2).
std::vector<int> tube_ranks(const CleanDessin& d);

struct InvariantReport {
    int n = 0;
    Passport passport;
    int dim_lambda = 0;
    int dim_center = 0;
    std::optional<int> dim_hh1;  // empty when the formula does not apply
    std::string dim_hh1_reason;  // set when dim_hh1 is empty
    std::vector<int> tube_ranks;
    int loop_arrows = 0;

    struct Oracles {
        int dim_lambda = 0; // basis count of the multiplication table
        int dim_center = 0;
        std::optional<int> dim_hh1; // empty only if the dimension bound is exceeded
        std::vector<int> tube_ranks; // cycle type of phi^2
    };
    std::optional<Oracles> oracles;
};

InvariantReport compute_report(const CleanDessin& d, bool with_oracles = false);

} // namespace dessinlab
