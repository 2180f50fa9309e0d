#pragma once

#include <compare>
#include <string>
#include <vector>

namespace atlas {

// A permutation of {0,...,d-1} stored as its image sequence: entry i is the
// image of point i. Immutable after construction.
//
// Composition convention, fixed project-wide: compose(a, b) applies b first,
// then a, i.e. compose(a, b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);  // throws ValidationError unless a bijection

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm power(long long e) const;
    int order() const;  // lcm of cycle lengths

    std::string str() const;  // "[2,0,1]"

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

Perm compose(const Perm& a, const Perm& b);       // apply b, then a
Perm conjugate(const Perm& p, const Perm& by);   // by * p * by^-1

// Small finite permutation group stored as its full, sorted element set.
// All groups in this project have order <= a few dozen, so explicit element
// sets beat any generator-word machinery.
class PermutationGroup {
public:
    // Closure of the generators under composition. Exact and finite.
    static PermutationGroup generate(int degree, const std::vector<Perm>& generators);
    static PermutationGroup trivial(int degree);
    // Wrap an element set that is already known to be a group (verified).
    static PermutationGroup from_elements(int degree, std::vector<Perm> elements);

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elems_.size()); }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& p) const;

    bool is_abelian() const;
    int max_element_order() const;

    auto operator<=>(const PermutationGroup&) const = default;

private:
    PermutationGroup(int degree, std::vector<Perm> elems)
        : degree_(degree), elems_(std::move(elems)) {}
    int degree_ = 0;
    std::vector<Perm> elems_;  // sorted, unique
};

// Isomorphism-type label. Isomorphic groups always receive equal labels; the
// named set covers the orders that occur for atom symmetry groups of low
// complexity, everything else falls back to "order-N" plus the abelian flag.
struct GroupLabel {
    std::string name;   // "e", "Z2", "Z3", "Z4", "Z6", ..., "Z2+Z2", "S3", "order-N"
    bool abelian = true;
    bool operator==(const GroupLabel&) const = default;
};

GroupLabel iso_type(const PermutationGroup& g);

// Every cyclic subgroup exactly once (as a subgroup, not per generator),
// including the trivial one. Sorted by order, then by element list.
std::vector<PermutationGroup> cyclic_subgroups(const PermutationGroup& g);

// True iff some listed conjugator c satisfies c * h1 * c^-1 = h2 as sets.
bool are_conjugate(const PermutationGroup& h1, const PermutationGroup& h2,
                   const std::vector<Perm>& conjugators);

}  // namespace atlas
