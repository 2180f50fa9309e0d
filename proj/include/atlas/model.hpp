#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atlas/fgraph.hpp"
#include "atlas/focus.hpp"
#include "atlas/name_table.hpp"

namespace atlas {

// One group element acting component-wise on atom x focus.
struct ProductElement {
    Perm atom_perm;
    FocusAutomorphism focus;
    auto operator<=>(const ProductElement&) const = default;
};

// A validated almost direct product (atom x F_n)/G. The group is the closure
// of the generator pairs inside Sym(atom) x Aut0(F_n); every non-identity
// element has been certified free on the product:
//   - a nonzero focus shift moves every point of the focus factor, or
//   - the atom part fixes no point and preserves no tau-orbit (preserving
//     one would pin the saddle between its two edges), while a zero-shift
//     focus part fixes at most the rank-0 points.
struct AlmostDirectProduct {
    FGraph atom;
    int n = 1;
    std::vector<ProductElement> generators;
    std::vector<ProductElement> elements;  // full closure, sorted
};

AlmostDirectProduct build_product(FGraph atom, int n, std::vector<ProductElement> generators);

// (atom x F_n)/Z_k with the distinguished generator pairing: the atom part
// has exact order k and is paired with the focus shift n/k at angle zero.
struct SimpleMinimalModel {
    FGraph atom;
    int n = 1;
    int k = 1;
    Perm generator;

    int m() const { return atom.m; }
    int shift() const { return n / k; }
    auto operator<=>(const SimpleMinimalModel&) const = default;
};

SimpleMinimalModel make_simple_minimal_model(FGraph atom, int n, int k, Perm generator);
AlmostDirectProduct as_product(const SimpleMinimalModel& model);

struct ReductionReport {
    long long group_order = 1;
    long long normal_order = 1;  // |N|
    int m_reduced = 0;
    int n_reduced = 0;
    int k = 1;
};

// Quotients out the subgroup N generated by elements that act trivially on
// the atom or have zero focus shift; the remainder is cyclic and yields the
// simple minimal model. Idempotent.
std::pair<SimpleMinimalModel, ReductionReport> reduce(const AlmostDirectProduct& adp);

// Number of rank-0 points of the model: m*n/k.
long long rank0_count(const SimpleMinimalModel& model);

// Number of tau-orbits preserved setwise by generator^(k/2); zero when k is
// odd or the model is a direct product.
int half_turn_fixed_count(const SimpleMinimalModel& model);

// The foliated surface through the rank-0 points transverse to the focus
// directions: n/k copies of the atom.
std::pair<std::string, int> m1_decomposition(const SimpleMinimalModel& model,
                                             const NameTable& table = builtin_name_table());

// The focus pieces through the rank-0 points, as (complexity, copies) pairs:
// {(n, m/k)} for odd k; {(n, (m-s)/k), (n/2, s/(k/2))} for even k, dropping
// zero-copy terms. All divisions are exact (asserted).
std::vector<std::pair<int, int>> m2_decomposition(const SimpleMinimalModel& model);

// Orbit counts of the cyclic group on the negative and positive boundary
// circles; the number of regular tori on either side of the singular value.
// Unordered (stored sorted) because atom equivalence may flip the sides.
std::pair<int, int> torus_counts(const SimpleMinimalModel& model);

// Chains of mutually adjoined 1-dimensional and 3-dimensional orbits on the
// singular leaf. Nodes are pairs (leaf edge v, rank-0 point x_i) and
// (leaf edge v, 2-dimensional component c_j); (v, x_i) adjoins (v, c_j) iff
// i is j or j+1 mod n. Nodes are quotiented by the diagonal action
// (generator on edges, +n/k on indices); the result is the multiset of
// per-component (1-dim, 3-dim) class counts, sorted.
std::vector<std::pair<int, int>> chain_invariant(const SimpleMinimalModel& model);

// The complete tuple of invariants used to separate inequivalent models.
struct Fingerprint {
    FGraph atom_canonical;
    int n = 1;
    int k = 1;
    int s = 0;
    long long rank0 = 0;
    std::string m1_name;
    int m1_copies = 0;
    std::vector<std::pair<int, int>> m2;
    std::pair<int, int> torus;
    std::vector<std::pair<int, int>> chains;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const SimpleMinimalModel& model,
                        const NameTable& table = builtin_name_table());

}  // namespace atlas
