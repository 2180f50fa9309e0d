#include "atlas/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int d = degree();
    std::vector<char> seen(d, 0);
    for (int v : img_) {
        if (v < 0 || v >= d || seen[v]) {
            throw ValidationError("permutation is not a bijection on {0,...," +
                                  std::to_string(d - 1) + "}: " + str());
        }
        seen[v] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv));
}

Perm Perm::power(long long e) const {
    const int ord = order();
    long long r = e % ord;
    if (r < 0) r += ord;
    Perm acc = identity(degree());
    for (long long i = 0; i < r; ++i) acc = compose(*this, acc);
    return acc;
}

int Perm::order() const {
    const int d = degree();
    std::vector<char> seen(d, 0);
    long long ord = 1;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = img_[j];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

std::string Perm::str() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < degree(); ++i) {
        if (i) out << ',';
        out << img_[i];
    }
    out << ']';
    return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw ValidationError("cannot compose permutations of degrees " +
                              std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = a[b[i]];
    return Perm(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& by) {
    return compose(compose(by, p), by.inverse());
}

PermutationGroup PermutationGroup::generate(int degree, const std::vector<Perm>& generators) {
    for (const Perm& g : generators) {
        if (g.degree() != degree)
            throw ValidationError("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
    }
    std::set<Perm> elems{Perm::identity(degree)};
    std::vector<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& e : frontier) {
            for (const Perm& g : generators) {
                Perm p = compose(g, e);
                if (elems.insert(p).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    return PermutationGroup(degree, std::vector<Perm>(elems.begin(), elems.end()));
}

PermutationGroup PermutationGroup::trivial(int degree) {
    return PermutationGroup(degree, {Perm::identity(degree)});
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermutationGroup g(degree, std::move(elements));
    for (const Perm& p : g.elems_) {
        if (p.degree() != degree)
            throw ValidationError("group element degree mismatch");
        if (!g.contains(p.inverse()) )
            throw ValidationError("element set is not closed under inversion");
    }
    for (const Perm& a : g.elems_)
        for (const Perm& b : g.elems_)
            if (!g.contains(compose(a, b)))
                throw ValidationError("element set is not closed under composition");
    if (!g.contains(Perm::identity(degree)))
        throw ValidationError("element set does not contain the identity");
    return g;
}

bool PermutationGroup::contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermutationGroup::is_abelian() const {
    for (const Perm& a : elems_)
        for (const Perm& b : elems_)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

int PermutationGroup::max_element_order() const {
    int best = 1;
    for (const Perm& p : elems_) best = std::max(best, p.order());
    return best;
}

GroupLabel iso_type(const PermutationGroup& g) {
    const long long n = g.order();
    const bool abelian = g.is_abelian();
    if (n == 1) return {"e", true};
    if (g.max_element_order() == n) return {"Z" + std::to_string(n), true};
    if (n == 4) return {"Z2+Z2", true};  // the only non-cyclic order-4 group
    if (n == 6 && !abelian) return {"S3", false};
    return {"order-" + std::to_string(n), abelian};
}

std::vector<PermutationGroup> cyclic_subgroups(const PermutationGroup& g) {
    std::set<std::vector<Perm>> seen;
    for (const Perm& p : g.elements()) {
        std::vector<Perm> sub;
        Perm q = Perm::identity(g.degree());
        do {
            sub.push_back(q);
            q = compose(p, q);
        } while (!q.is_identity());
        std::sort(sub.begin(), sub.end());
        seen.insert(std::move(sub));
    }
    std::vector<PermutationGroup> out;
    out.reserve(seen.size());
    for (const auto& sub : seen) out.push_back(PermutationGroup::from_elements(g.degree(), sub));
    std::sort(out.begin(), out.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

bool are_conjugate(const PermutationGroup& h1, const PermutationGroup& h2,
                   const std::vector<Perm>& conjugators) {
    if (h1.degree() != h2.degree())
        throw ValidationError("conjugacy test needs equal degrees, got " +
                              std::to_string(h1.degree()) + " and " + std::to_string(h2.degree()));
    for (const Perm& c : conjugators)
        if (c.degree() != h1.degree())
            throw ValidationError("conjugator degree mismatch: " + c.str());
    if (h1.order() != h2.order()) return false;
    for (const Perm& c : conjugators) {
        bool ok = true;
        for (const Perm& p : h1.elements()) {
            if (!h2.contains(conjugate(p, c))) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace atlas
