#include "atlas/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

constexpr std::size_t kClosureCap = 100000;

ProductElement compose(const ProductElement& a, const ProductElement& b) {
    return ProductElement{atlas::compose(a.atom_perm, b.atom_perm),
                          atlas::compose(a.focus, b.focus)};
}

bool is_identity(const ProductElement& e) {
    return e.atom_perm.is_identity() && e.focus.shift == 0 && e.focus.angle.is_zero();
}

std::string describe(const ProductElement& e) {
    std::ostringstream out;
    out << "(atom=" << e.atom_perm.str() << ", shift=" << e.focus.shift
        << ", angle=" << e.focus.angle.str() << ")";
    return out.str();
}

// Index of a tau-orbit preserved setwise by p, or -1 when p moves every one.
int preserved_tau_orbit(const FGraph& atom, const Perm& p) {
    for (int x = 0; x < atom.points(); ++x) {
        const int y = atom.tau[x];
        if (x > y) continue;
        if (p[x] == x || p[x] == y) return x;
    }
    return -1;
}

// Free on atom x focus. Throws with a witness fixed point otherwise.
void check_free(const FGraph& atom, const ProductElement& e) {
    if (is_identity(e)) return;
    if (e.focus.shift != 0) return;  // nonzero shift moves every focus point
    if (e.atom_perm.is_identity())
        throw ValidationError("non-free action: element " + describe(e) +
                              " fixes the whole atom and the focus rank-0 point x0");
    for (int x = 0; x < atom.points(); ++x)
        if (e.atom_perm[x] == x)
            throw ValidationError("non-free action: element " + describe(e) +
                                  " fixes leaf edge " + std::to_string(x) +
                                  " and the focus rank-0 point x0");
    if (int x = preserved_tau_orbit(atom, e.atom_perm); x >= 0) {
        const int y = atom.tau[x];
        throw ValidationError("non-free action: element " + describe(e) +
                              " fixes the atom rank-0 point {" + std::to_string(std::min(x, y)) +
                              "," + std::to_string(std::max(x, y)) +
                              "} and the focus rank-0 point x0");
    }
    // Remaining fixed-point sources (reversed leaf edges, reversed boundary
    // circles) cannot occur for symmetries of a connected atom.
}

std::vector<Perm> cyclic_powers(const Perm& g) {
    std::vector<Perm> out;
    Perm q = Perm::identity(g.degree());
    do {
        out.push_back(q);
        q = atlas::compose(g, q);
    } while (!q.is_identity());
    return out;
}

int orbit_count_on_cycles(const std::vector<int>& img, const Perm& g, int order) {
    const int d = static_cast<int>(img.size());
    std::vector<int> cycle_of(d, -1);
    int ncycles = 0;
    for (int i = 0; i < d; ++i) {
        if (cycle_of[i] >= 0) continue;
        for (int j = i; cycle_of[j] < 0; j = img[j]) cycle_of[j] = ncycles;
        ++ncycles;
    }
    std::vector<int> parent(ncycles);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    Perm p = Perm::identity(d);
    for (int t = 1; t < order; ++t) {
        p = atlas::compose(g, p);
        for (int i = 0; i < d; ++i) {
            const int a = find(cycle_of[i]);
            const int b = find(cycle_of[p[i]]);
            if (a != b) parent[a] = b;
        }
    }
    std::set<int> roots;
    for (int c = 0; c < ncycles; ++c) roots.insert(find(c));
    return static_cast<int>(roots.size());
}

}  // namespace

AlmostDirectProduct build_product(FGraph atom, int n, std::vector<ProductElement> generators) {
    FGraph f = validated(std::move(atom));
    if (n < 1) throw ValidationError("focus complexity must be at least 1, got " + std::to_string(n));
    const PermutationGroup sym = symmetry_group(f);
    for (const ProductElement& g : generators) {
        if (g.atom_perm.degree() != f.points())
            throw ValidationError("generator atom part " + g.atom_perm.str() +
                                  " does not act on " + std::to_string(f.points()) + " points");
        if (!sym.contains(g.atom_perm))
            throw ValidationError("generator atom part " + g.atom_perm.str() +
                                  " is not a symmetry of the atom");
        if (g.focus.n != n)
            throw ValidationError("generator focus part lives on F_" + std::to_string(g.focus.n) +
                                  ", expected F_" + std::to_string(n));
        shift_automorphism(g.focus.n, g.focus.shift, g.focus.angle);  // range check
    }

    std::set<ProductElement> closure;
    closure.insert(ProductElement{Perm::identity(f.points()), focus_identity(n)});
    std::vector<ProductElement> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<ProductElement> next;
        for (const ProductElement& e : frontier) {
            for (const ProductElement& g : generators) {
                ProductElement p = compose(g, e);
                if (closure.insert(p).second) next.push_back(std::move(p));
            }
        }
        if (closure.size() > kClosureCap)
            throw ResourceError("group closure exceeded " + std::to_string(kClosureCap) +
                                " elements");
        frontier = std::move(next);
    }
    for (const ProductElement& e : closure) check_free(f, e);

    AlmostDirectProduct adp;
    adp.atom = std::move(f);
    adp.n = n;
    adp.generators = std::move(generators);
    adp.elements.assign(closure.begin(), closure.end());
    return adp;
}

SimpleMinimalModel make_simple_minimal_model(FGraph atom, int n, int k, Perm generator) {
    FGraph f = validated(std::move(atom));
    if (n < 1 || k < 1)
        throw ValidationError("simple minimal model needs n >= 1 and k >= 1");
    if (n % k != 0)
        throw ValidationError("group order " + std::to_string(k) + " does not divide focus complexity " +
                              std::to_string(n));
    if (generator.degree() != f.points())
        throw ValidationError("generator degree does not match the atom");
    const PermutationGroup sym = symmetry_group(f);
    if (!sym.contains(generator))
        throw ValidationError("generator " + generator.str() + " is not a symmetry of the atom");
    if (generator.order() != k)
        throw ValidationError("generator " + generator.str() + " has order " +
                              std::to_string(generator.order()) + ", expected exact order " +
                              std::to_string(k));
    return SimpleMinimalModel{std::move(f), n, k, std::move(generator)};
}

AlmostDirectProduct as_product(const SimpleMinimalModel& model) {
    std::vector<ProductElement> gens;
    if (model.k > 1)
        gens.push_back(
            ProductElement{model.generator, shift_automorphism(model.n, model.shift())});
    return build_product(model.atom, model.n, std::move(gens));
}

std::pair<SimpleMinimalModel, ReductionReport> reduce(const AlmostDirectProduct& adp) {
    const int n = adp.n;

    // N: generated by the elements acting trivially on the atom or moving no
    // focus rank-0 point. For a validated product this subgroup acts freely
    // on the atom surface; products stay inside the closure.
    std::vector<ProductElement> ngens;
    for (const ProductElement& e : adp.elements)
        if (e.atom_perm.is_identity() || e.focus.shift == 0) ngens.push_back(e);
    std::set<ProductElement> normal(ngens.begin(), ngens.end());
    std::vector<ProductElement> frontier(normal.begin(), normal.end());
    while (!frontier.empty()) {
        std::vector<ProductElement> next;
        for (const ProductElement& a : frontier)
            for (const ProductElement& g : ngens) {
                ProductElement p = compose(g, a);
                if (normal.insert(p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }

    const long long group_order = static_cast<long long>(adp.elements.size());
    const long long normal_order = static_cast<long long>(normal.size());
    if (group_order % normal_order != 0)
        throw InternalError("normal subgroup order does not divide the group order");
    const int k = static_cast<int>(group_order / normal_order);

    // Atom quotient by the atom image of N.
    std::set<Perm> atom_parts;
    for (const ProductElement& e : normal) atom_parts.insert(e.atom_perm);
    const PermutationGroup n_atom =
        PermutationGroup::from_elements(adp.atom.points(), {atom_parts.begin(), atom_parts.end()});
    const FGraph reduced_atom = quotient_atom(adp.atom, n_atom);

    // Focus quotient: orbits of the shifts of N on the cyclic chain.
    std::vector<FocusAutomorphism> focus_parts;
    focus_parts.reserve(normal.size());
    for (const ProductElement& e : normal) focus_parts.push_back(e.focus);
    const int n_reduced = rank0_orbit_count(n, focus_parts);

    ReductionReport report{group_order, normal_order, reduced_atom.m, n_reduced, k};

    if (k == 1) {
        SimpleMinimalModel model{reduced_atom, n_reduced, 1, Perm::identity(reduced_atom.points())};
        return {std::move(model), report};
    }
    if (n_reduced % k != 0)
        throw InternalError("reduced focus complexity is not divisible by the quotient order");

    // Orbit labels: points x and y are identified iff x = y mod g where g is
    // the orbit count, so the induced shift of an element is its shift mod g.
    // Orbits of the atom image of N on the leaf edges, labelled as in
    // quotient_atom: by order of first appearance.
    std::vector<int> orbit(adp.atom.points(), -1);
    int norbits = 0;
    for (int x = 0; x < adp.atom.points(); ++x) {
        if (orbit[x] >= 0) continue;
        for (const Perm& p : n_atom.elements()) orbit[p[x]] = norbits;
        ++norbits;
    }

    // Pick the coset generator whose induced shift is exactly n'/k.
    const int want_shift = n_reduced / k;
    std::vector<Perm> candidates;
    for (const ProductElement& e : adp.elements) {
        if (e.focus.shift % n_reduced != want_shift) continue;
        std::vector<int> img(norbits, -1);
        bool consistent = true;
        for (int x = 0; x < adp.atom.points() && consistent; ++x) {
            const int from = orbit[x];
            const int to = orbit[e.atom_perm[x]];
            if (img[from] < 0)
                img[from] = to;
            else if (img[from] != to)
                consistent = false;
        }
        if (!consistent)
            throw InternalError("element does not descend to the quotient atom");
        candidates.emplace_back(std::move(img));
    }
    if (candidates.empty())
        throw InternalError("no coset generator with the distinguished shift");
    Perm generator = *std::min_element(candidates.begin(), candidates.end());
    if (generator.order() != k)
        throw InternalError("induced generator order " + std::to_string(generator.order()) +
                            " differs from quotient order " + std::to_string(k));

    SimpleMinimalModel model =
        make_simple_minimal_model(reduced_atom, n_reduced, k, std::move(generator));
    return {std::move(model), report};
}

long long rank0_count(const SimpleMinimalModel& model) {
    return static_cast<long long>(model.m()) * model.n / model.k;
}

int half_turn_fixed_count(const SimpleMinimalModel& model) {
    if (model.k % 2 != 0 || model.k == 1) return 0;
    AtomAction action{model.atom, model.generator, model.k};
    return rank0_fixed_count(action, model.k / 2);
}

std::pair<std::string, int> m1_decomposition(const SimpleMinimalModel& model,
                                             const NameTable& table) {
    return {identify(model.atom, table), model.n / model.k};
}

std::vector<std::pair<int, int>> m2_decomposition(const SimpleMinimalModel& model) {
    const int m = model.m();
    const int k = model.k;
    std::vector<std::pair<int, int>> out;
    if (k % 2 != 0) {
        if (m % k != 0) throw InternalError("odd k must divide the complexity");
        out.emplace_back(model.n, m / k);
    } else {
        const int k1 = k / 2;
        const int s = half_turn_fixed_count(model);
        if ((m - s) % k != 0 || s % k1 != 0 || model.n % 2 != 0)
            throw InternalError("focus piece multiplicities are not integral");
        if (m - s > 0) out.emplace_back(model.n, (m - s) / k);
        if (s > 0) out.emplace_back(model.n / 2, s / k1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> torus_counts(const SimpleMinimalModel& model) {
    const int a = orbit_count_on_cycles(model.atom.sigma.images(), model.generator, model.k);
    const int b = orbit_count_on_cycles(compose(model.atom.sigma, model.atom.tau).images(),
                                        model.generator, model.k);
    return {std::min(a, b), std::max(a, b)};
}

std::vector<std::pair<int, int>> chain_invariant(const SimpleMinimalModel& model) {
    const int d = model.atom.points();
    const int n = model.n;
    const int step = model.shift();
    const int total = 2 * d * n;  // (edge, x_i) nodes then (edge, c_j) nodes

    auto node_x = [&](int v, int i) { return v * n + i; };
    auto node_c = [&](int v, int j) { return d * n + v * n + j; };

    // Orbit label per node under the cyclic diagonal action.
    std::vector<int> cls(total, -1);
    int nclasses = 0;
    for (int start = 0; start < total; ++start) {
        if (cls[start] >= 0) continue;
        int v = (start % (d * n)) / n;
        int i = start % n;
        const bool is_c = start >= d * n;
        for (int t = 0; t < model.k; ++t) {
            const int node = is_c ? node_c(v, i) : node_x(v, i);
            cls[node] = nclasses;
            v = model.generator[v];
            i = (i + step) % n;
        }
        ++nclasses;
    }

    // Components of the quotient incidence graph.
    std::vector<int> parent(nclasses);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    for (int v = 0; v < d; ++v)
        for (int j = 0; j < n; ++j) {
            unite(cls[node_x(v, j)], cls[node_c(v, j)]);
            unite(cls[node_x(v, (j + 1) % n)], cls[node_c(v, j)]);
        }

    // Count 1-dimensional and 3-dimensional classes per component, once per
    // class.
    std::map<int, std::pair<int, int>> per_component;
    std::vector<char> seen(nclasses, 0);
    for (int node = 0; node < total; ++node) {
        const int c = cls[node];
        if (seen[c]) continue;
        seen[c] = 1;
        auto& [ones, threes] = per_component[find(c)];
        if (node < d * n)
            ++ones;
        else
            ++threes;
    }
    std::vector<std::pair<int, int>> chains;
    chains.reserve(per_component.size());
    for (const auto& [root, counts] : per_component) chains.push_back(counts);
    std::sort(chains.begin(), chains.end());
    return chains;
}

Fingerprint fingerprint(const SimpleMinimalModel& model, const NameTable& table) {
    Fingerprint fp;
    fp.atom_canonical = canonical_form(model.atom);
    fp.n = model.n;
    fp.k = model.k;
    fp.s = half_turn_fixed_count(model);
    fp.rank0 = rank0_count(model);
    std::tie(fp.m1_name, fp.m1_copies) = m1_decomposition(model, table);
    fp.m2 = m2_decomposition(model);
    fp.torus = torus_counts(model);
    fp.chains = chain_invariant(model);
    return fp;
}

}  // namespace atlas
