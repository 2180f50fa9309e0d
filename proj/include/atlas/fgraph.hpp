#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atlas/permutation.hpp"

namespace atlas {

// A saddle 2-atom of complexity m, encoded as its f-graph: a pair of
// permutations on 2m points.
//
//   sigma  - oriented cycle structure; its cycles are the negative boundary
//            circles of the atom.
//   tau    - a fixed-point-free involution; its m 2-point orbits are the
//            saddle points (the rank-0 points of the atom). The 2m points
//            themselves double as the edges of the singular leaf.
//
// The positive boundary circles are the cycles of compose(sigma, tau),
// i.e. tau applied first. This orientation convention is calibrated so the
// complexity-1 atom (sigma=[1,0], tau=[1,0]) splits one circle into two.
//
// Two encodings describe the same atom iff they agree up to simultaneous
// relabelling of the points together with two moves that leave the atom
// itself unchanged:
//   mirror: sigma -> sigma^-1          (orientation reversal)
//   flip:   sigma -> sigma * tau       (sign change of the height function)
// canonical_form() minimises over all relabellings and both moves. The
// symmetry group excludes the moves: it is the plain centraliser of
// {sigma, tau}.
struct FGraph {
    int m = 0;
    Perm sigma;
    Perm tau;

    int points() const { return 2 * m; }
    auto operator<=>(const FGraph&) const = default;
};

// Checks all FGraph invariants; returns the input unchanged on success.
// Throws ValidationError: degree mismatch, tau not a fixed-point-free
// involution, or a disconnected graph.
FGraph validated(FGraph f);
bool is_valid_fgraph(const FGraph& f, std::string* why = nullptr);

// (negative, positive) boundary circle counts.
std::pair<int, int> boundary_circles(const FGraph& f);

// g = (2 + m - b) / 2 where b = negative + positive. Always a non-negative
// integer for a valid atom; asserted.
int genus(const FGraph& f);

// All permutations commuting with both sigma and tau. Order is at most 2m.
PermutationGroup symmetry_group(const FGraph& f);

enum class Move { Identity, Mirror, Flip, MirrorFlip };
const char* move_name(Move m);

// Image of (sigma, tau) under a move. tau is untouched by every move.
FGraph apply_move(const FGraph& f, Move mv);

struct TaggedSymmetry {
    Perm perm;
    Move move;
    auto operator<=>(const TaggedSymmetry&) const = default;
};

// Every permutation p such that conjugating (sigma, tau) by p equals a move
// image of (sigma, tau), tagged with that move. A permutation can appear
// once per move it realises. The Identity-tagged subset equals
// symmetry_group(f); each non-empty tag class is a coset of it.
std::vector<TaggedSymmetry> extended_symmetries(const FGraph& f);

// The distinct permutations from extended_symmetries (conjugators usable for
// equivalence tests that may also reverse orientation or function sign).
std::vector<Perm> extended_conjugators(const FGraph& f);

// Lexicographically minimal (sigma, tau) image sequence over all
// relabellings and all four moves. Idempotent; equal exactly on equal atoms.
FGraph canonical_form(const FGraph& f);

struct CanonicalWitness {
    FGraph form;   // the canonical form
    Move move;     // move applied before relabelling
    Perm relabel;  // relabel * move(f) * relabel^-1 == form
};
CanonicalWitness canonical_form_with_witness(const FGraph& f);

bool same_atom(const FGraph& a, const FGraph& b);

// 16-hex-digit digest of the canonical form; backs "unnamed-<hash>" names.
std::string canonical_hash(const FGraph& f);

struct EnumerateOptions {
    int max_complexity = 6;  // requests above this bound raise ResourceError
    int threads = 0;         // 0 = pick automatically
};

// All connected saddle atoms of complexity m, one canonical representative
// per atom, sorted. Fixes tau to (0 1)(2 3)... and sweeps sigma over all
// permutations of the 2m points; the sweep is split across worker threads
// and merged, so results are independent of the thread count.
std::vector<FGraph> enumerate_atoms(int m, const EnumerateOptions& opts = {});

enum class Series { X, Y };

// The maximally symmetric series. X_m: two co-oriented m-cycles joined by a
// rung matching. Y_m: a single 2m-cycle with the antipodal matching. Both
// admit an involution that keeps every saddle point in place, and their
// symmetry groups have the maximal order 2m.
FGraph standard_series(Series s, int m);

// A cyclic action on an atom: a generator that commutes with sigma and tau.
struct AtomAction {
    FGraph atom;
    Perm generator;
    int order = 1;
};
AtomAction make_atom_action(FGraph atom, Perm generator);

// Number of tau-orbits (saddle points) mapped to themselves, setwise, by
// generator^power.
int rank0_fixed_count(const AtomAction& a, long long power);

// Orbit atom of a subgroup h of the symmetry group acting freely on the
// atom surface: no non-identity element may fix a point or preserve a
// tau-orbit (which would pin the saddle between its two edges). Complexity
// of the result is m / |h|. Violations raise ValidationError naming the
// offending element and the fixed point.
FGraph quotient_atom(const FGraph& f, const PermutationGroup& h);

}  // namespace atlas
