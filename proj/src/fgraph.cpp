#include "atlas/fgraph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

constexpr int kMaxPoints = 16;  // complexity bound 8; far above every configured use

int count_cycles(const std::vector<int>& img) {
    const int d = static_cast<int>(img.size());
    std::vector<char> seen(d, 0);
    int cycles = 0;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = img[j]) seen[j] = 1;
    }
    return cycles;
}

bool connected(const std::vector<int>& sigma, const std::vector<int>& tau) {
    const int d = static_cast<int>(sigma.size());
    if (d == 0) return false;
    std::array<int, kMaxPoints> stack{};
    std::array<char, kMaxPoints> seen{};
    int top = 0;
    stack[top++] = 0;
    seen[0] = 1;
    int reached = 1;
    while (top > 0) {
        const int x = stack[--top];
        for (int y : {sigma[x], tau[x]}) {
            if (!seen[y]) {
                seen[y] = 1;
                stack[top++] = y;
                ++reached;
            }
        }
    }
    return reached == d;
}

// ---------------------------------------------------------------------------
// Canonical labelling.
//
// Relabelling by p sends (sigma, tau) to (p*sigma*p^-1, p*tau*p^-1). The
// canonical form is the lexicographic minimum of the concatenated image
// sequence sigma' ++ tau' over all relabellings, taken per move variant.
//
// Exact branch-and-bound: new labels are chosen in increasing order, so at
// step i the used labels are exactly {0,...,i-1}. sigma'(i) is forced once
// the point carrying label i is fixed, except that unlabelled sigma-images
// receive the next free label. Branching happens only when label i has no
// carrier yet (a new sigma-component starts); candidates are tried in order
// of the value they produce and pruned against the best word so far.
// ---------------------------------------------------------------------------

struct CanonSearch {
    int d = 0;
    const int* sig = nullptr;
    const int* tav = nullptr;
    std::array<int, kMaxPoints> new2old{};
    std::array<int, kMaxPoints> old2new{};
    int assigned = 0;
    std::array<int, 2 * kMaxPoints> cur{};
    std::array<int, 2 * kMaxPoints> best{};
    std::array<int, kMaxPoints> best_old2new{};
    bool have_best = false;

    void init(int degree, const int* s, const int* t) {
        d = degree;
        sig = s;
        tav = t;
        new2old.fill(-1);
        old2new.fill(-1);
        assigned = 0;
        have_best = false;
    }

    void run() { descend(0, true); }

    void take_leaf() {
        if (have_best) {
            for (int i = 0; i < 2 * d; ++i) {
                if (cur[i] != best[i]) {
                    if (cur[i] > best[i]) return;
                    break;
                }
            }
        }
        std::copy(cur.begin(), cur.begin() + 2 * d, best.begin());
        std::copy(old2new.begin(), old2new.begin() + d, best_old2new.begin());
        have_best = true;
    }

    void descend(int pos, bool tight) {
        if (pos == 2 * d) {
            take_leaf();
            return;
        }
        if (pos >= d) {
            // tau phase: everything is labelled, values are forced
            const int x = new2old[pos - d];
            const int val = old2new[tav[x]];
            if (have_best && tight && val > best[pos]) return;
            cur[pos] = val;
            descend(pos + 1, tight && have_best && val == best[pos]);
            return;
        }
        const int i = pos;
        if (new2old[i] >= 0) {
            const int x = new2old[i];
            const int y = sig[x];
            int val;
            int extra = -1;
            if (old2new[y] >= 0) {
                val = old2new[y];
            } else {
                val = assigned;
                extra = y;
            }
            if (have_best && tight && val > best[pos]) return;
            if (extra >= 0) {
                new2old[assigned] = extra;
                old2new[extra] = assigned;
                ++assigned;
            }
            cur[pos] = val;
            descend(pos + 1, tight && have_best && val == best[pos]);
            if (extra >= 0) {
                --assigned;
                old2new[extra] = -1;
                new2old[assigned] = -1;
            }
            return;
        }
        // Label i has no carrier: branch over every unlabelled point.
        std::array<std::pair<int, int>, kMaxPoints> cand{};  // (value, point)
        int ncand = 0;
        for (int x = 0; x < d; ++x) {
            if (old2new[x] >= 0) continue;
            const int y = sig[x];
            int val;
            if (old2new[y] >= 0)
                val = old2new[y];
            else if (y == x)
                val = i;
            else
                val = i + 1;
            cand[ncand++] = {val, x};
        }
        std::sort(cand.begin(), cand.begin() + ncand);
        for (int c = 0; c < ncand; ++c) {
            const auto [val, x] = cand[c];
            if (have_best && tight && val > best[pos]) break;
            new2old[i] = x;
            old2new[x] = i;
            ++assigned;
            const int y = sig[x];
            int extra = -1;
            if (old2new[y] < 0) {
                extra = y;
                new2old[assigned] = y;
                old2new[y] = assigned;
                ++assigned;
            }
            cur[pos] = val;
            descend(pos + 1, tight && have_best && val == best[pos]);
            if (extra >= 0) {
                --assigned;
                old2new[extra] = -1;
                new2old[assigned] = -1;
            }
            --assigned;
            old2new[x] = -1;
            new2old[i] = -1;
        }
    }
};

struct VariantImages {
    std::array<int, kMaxPoints> sigma{};
    std::array<int, kMaxPoints> tau{};
};

VariantImages variant_images(const FGraph& f, Move mv) {
    VariantImages v;
    const int d = f.points();
    const auto& s = f.sigma.images();
    const auto& t = f.tau.images();
    switch (mv) {
        case Move::Identity:
            for (int i = 0; i < d; ++i) v.sigma[i] = s[i];
            break;
        case Move::Mirror:
            for (int i = 0; i < d; ++i) v.sigma[s[i]] = i;
            break;
        case Move::Flip:
            for (int i = 0; i < d; ++i) v.sigma[i] = s[t[i]];
            break;
        case Move::MirrorFlip:
            for (int i = 0; i < d; ++i) v.sigma[s[t[i]]] = i;
            break;
    }
    for (int i = 0; i < d; ++i) v.tau[i] = t[i];
    return v;
}

constexpr std::array<Move, 4> kMoves{Move::Identity, Move::Mirror, Move::Flip,
                                     Move::MirrorFlip};

// Fast canonical key used only to bucket candidates during enumeration: the
// minimum, over moves and seed points, of the word produced by a forward
// traversal labelling. Equal keys imply equal atoms and vice versa; the
// exact branch-and-bound label is still computed once per bucket.
std::string traversal_key(int d, const int* sig, const int* tav) {
    std::array<int, kMaxPoints> old2new{};
    std::array<int, kMaxPoints> new2old{};
    std::string best;
    std::string word(static_cast<size_t>(2 * d), '\0');
    for (int seed = 0; seed < d; ++seed) {
        old2new.fill(-1);
        old2new[seed] = 0;
        new2old[0] = seed;
        int assigned = 1;
        for (int i = 0; i < d; ++i) {
            const int x = new2old[i];
            for (int y : {sig[x], tav[x]}) {
                if (old2new[y] < 0) {
                    old2new[y] = assigned;
                    new2old[assigned] = y;
                    ++assigned;
                }
            }
        }
        for (int i = 0; i < d; ++i) {
            word[i] = static_cast<char>(old2new[sig[new2old[i]]]);
            word[d + i] = static_cast<char>(old2new[tav[new2old[i]]]);
        }
        if (best.empty() || word < best) best = word;
    }
    return best;
}

std::string atom_key(const FGraph& f) {
    const int d = f.points();
    std::string best;
    for (Move mv : kMoves) {
        VariantImages v = variant_images(f, mv);
        std::string key = traversal_key(d, v.sigma.data(), v.tau.data());
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<Perm> conjugators_onto(const FGraph& f, const VariantImages& target) {
    // p with p*sigma*p^-1 = target.sigma and p*tau*p^-1 = target.tau is
    // determined by the image of point 0 (the pair acts transitively), so
    // propagate from every candidate image and keep the consistent ones.
    const int d = f.points();
    const auto& s = f.sigma.images();
    const auto& t = f.tau.images();
    std::vector<Perm> out;
    for (int p0 = 0; p0 < d; ++p0) {
        std::array<int, kMaxPoints> img{};
        img.fill(-1);
        img[0] = p0;
        std::array<int, kMaxPoints> stack{};
        int top = 0;
        stack[top++] = 0;
        bool ok = true;
        while (top > 0 && ok) {
            const int x = stack[--top];
            const std::array<std::pair<int, int>, 2> steps{
                std::pair<int, int>{s[x], target.sigma[img[x]]},
                std::pair<int, int>{t[x], target.tau[img[x]]}};
            for (const auto& [from, to] : steps) {
                if (img[from] < 0) {
                    img[from] = to;
                    stack[top++] = from;
                } else if (img[from] != to) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<int> images(img.begin(), img.begin() + d);
        // connectivity guarantees everything got an image; verify bijection
        std::vector<char> seen(d, 0);
        for (int v : images) {
            if (v < 0 || seen[v]) {
                ok = false;
                break;
            }
            seen[v] = 1;
        }
        if (ok) out.emplace_back(std::move(images));
    }
    return out;
}

}  // namespace

bool is_valid_fgraph(const FGraph& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (f.m < 1) return fail("complexity must be at least 1, got " + std::to_string(f.m));
    if (f.points() > kMaxPoints)
        return fail("complexity " + std::to_string(f.m) + " exceeds the supported maximum " +
                    std::to_string(kMaxPoints / 2));
    const int d = f.points();
    if (f.sigma.degree() != d || f.tau.degree() != d)
        return fail("sigma and tau must act on 2m = " + std::to_string(d) + " points, got " +
                    std::to_string(f.sigma.degree()) + " and " + std::to_string(f.tau.degree()));
    for (int i = 0; i < d; ++i) {
        if (f.tau[i] == i)
            return fail("tau has a fixed point at " + std::to_string(i) +
                        "; it must be a fixed-point-free involution");
        if (f.tau[f.tau[i]] != i)
            return fail("tau is not an involution: tau(tau(" + std::to_string(i) +
                        ")) = " + std::to_string(f.tau[f.tau[i]]));
    }
    if (!connected(f.sigma.images(), f.tau.images()))
        return fail("the graph with edges {i, sigma(i)} and {i, tau(i)} is disconnected");
    return true;
}

FGraph validated(FGraph f) {
    std::string why;
    if (!is_valid_fgraph(f, &why)) throw ValidationError("invalid f-graph: " + why);
    return f;
}

std::pair<int, int> boundary_circles(const FGraph& f) {
    const int negative = count_cycles(f.sigma.images());
    const int positive = count_cycles(compose(f.sigma, f.tau).images());
    return {negative, positive};
}

int genus(const FGraph& f) {
    const auto [neg, pos] = boundary_circles(f);
    const int b = neg + pos;
    const int twice_g = 2 + f.m - b;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw InternalError("genus is not a non-negative integer for " + f.sigma.str() + " / " +
                            f.tau.str());
    return twice_g / 2;
}

const char* move_name(Move m) {
    switch (m) {
        case Move::Identity: return "identity";
        case Move::Mirror: return "mirror";
        case Move::Flip: return "flip";
        case Move::MirrorFlip: return "mirror-flip";
    }
    return "?";
}

FGraph apply_move(const FGraph& f, Move mv) {
    VariantImages v = variant_images(f, mv);
    const int d = f.points();
    return FGraph{f.m, Perm(std::vector<int>(v.sigma.begin(), v.sigma.begin() + d)), f.tau};
}

PermutationGroup symmetry_group(const FGraph& f) {
    FGraph g = validated(f);
    VariantImages self = variant_images(g, Move::Identity);
    return PermutationGroup::from_elements(g.points(), conjugators_onto(g, self));
}

std::vector<TaggedSymmetry> extended_symmetries(const FGraph& f) {
    FGraph g = validated(f);
    std::vector<TaggedSymmetry> out;
    for (Move mv : kMoves) {
        VariantImages v = variant_images(g, mv);
        for (Perm& p : conjugators_onto(g, v)) out.push_back({std::move(p), mv});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> extended_conjugators(const FGraph& f) {
    std::set<Perm> seen;
    for (auto& ts : extended_symmetries(f)) seen.insert(ts.perm);
    return {seen.begin(), seen.end()};
}

CanonicalWitness canonical_form_with_witness(const FGraph& f) {
    FGraph g = validated(f);
    const int d = g.points();
    CanonSearch search;
    std::array<int, 2 * kMaxPoints> best{};
    std::array<int, kMaxPoints> best_map{};
    Move best_move = Move::Identity;
    bool have = false;
    for (Move mv : kMoves) {
        VariantImages v = variant_images(g, mv);
        search.init(d, v.sigma.data(), v.tau.data());
        search.run();
        if (!have || std::lexicographical_compare(search.best.begin(), search.best.begin() + 2 * d,
                                                  best.begin(), best.begin() + 2 * d)) {
            best = search.best;
            best_map = search.best_old2new;
            best_move = mv;
            have = true;
        }
    }
    FGraph canon{g.m, Perm(std::vector<int>(best.begin(), best.begin() + d)),
                 Perm(std::vector<int>(best.begin() + d, best.begin() + 2 * d))};
    return CanonicalWitness{std::move(canon), best_move,
                            Perm(std::vector<int>(best_map.begin(), best_map.begin() + d))};
}

FGraph canonical_form(const FGraph& f) { return canonical_form_with_witness(f).form; }

bool same_atom(const FGraph& a, const FGraph& b) {
    if (a.m != b.m) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string canonical_hash(const FGraph& f) {
    FGraph c = canonical_form(f);
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](int v) {
        h ^= static_cast<std::uint64_t>(v) + 0x9eULL;
        h *= 1099511628211ULL;
    };
    mix(c.m);
    for (int v : c.sigma.images()) mix(v);
    for (int v : c.tau.images()) mix(v);
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xF);
    return out.str();
}

std::vector<FGraph> enumerate_atoms(int m, const EnumerateOptions& opts) {
    if (m < 1) throw ValidationError("complexity must be at least 1, got " + std::to_string(m));
    if (m > opts.max_complexity)
        throw ResourceError("complexity " + std::to_string(m) +
                            " exceeds the enumeration bound " + std::to_string(opts.max_complexity));
    if (2 * m > kMaxPoints)
        throw ResourceError("complexity " + std::to_string(m) + " is not supported");

    const int d = 2 * m;
    std::vector<int> tau0(d);
    for (int i = 0; i < d; ++i) tau0[i] = i ^ 1;  // (0 1)(2 3)...

    // One worker per value of sigma(0); each keeps a local first-hit per key.
    auto sweep_first = [&](int first, std::map<std::string, std::vector<int>>& hits) {
        std::vector<int> rest;
        rest.reserve(d - 1);
        for (int v = 0; v < d; ++v)
            if (v != first) rest.push_back(v);
        std::vector<int> sigma(d);
        sigma[0] = first;
        do {
            std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
            if (!connected(sigma, tau0)) continue;
            FGraph f{m, Perm(std::vector<int>(sigma)), Perm(std::vector<int>(tau0))};
            std::string key = atom_key(f);
            hits.emplace(std::move(key), sigma);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };

    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, d);

    std::map<std::string, std::vector<int>> merged;
    if (m <= 4 || threads == 1) {
        for (int first = 0; first < d; ++first) sweep_first(first, merged);
    } else {
        std::vector<std::map<std::string, std::vector<int>>> local(d);
        std::vector<std::thread> pool;
        std::atomic<int> next_first{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                for (int first = next_first++; first < d; first = next_first++)
                    sweep_first(first, local[first]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : local)
            for (auto& [key, sigma] : part) merged.emplace(key, sigma);
    }

    std::set<FGraph> atoms;
    for (const auto& [key, sigma] : merged) {
        FGraph f{m, Perm(std::vector<int>(sigma)), Perm(std::vector<int>(tau0))};
        atoms.insert(canonical_form(f));
    }
    return {atoms.begin(), atoms.end()};
}

FGraph standard_series(Series s, int m) {
    if (m < 1) throw ValidationError("series complexity must be at least 1");
    const int d = 2 * m;
    std::vector<int> sigma(d), tau(d);
    if (s == Series::X) {
        for (int i = 0; i < m; ++i) {
            sigma[i] = (i + 1) % m;
            sigma[m + i] = m + (i + 1) % m;
            tau[i] = m + i;
            tau[m + i] = i;
        }
    } else {
        for (int i = 0; i < d; ++i) {
            sigma[i] = (i + 1) % d;
            tau[i] = (i + m) % d;
        }
    }
    return validated(FGraph{m, Perm(std::move(sigma)), Perm(std::move(tau))});
}

AtomAction make_atom_action(FGraph atom, Perm generator) {
    FGraph f = validated(std::move(atom));
    if (generator.degree() != f.points())
        throw ValidationError("action generator degree " + std::to_string(generator.degree()) +
                              " does not match atom on " + std::to_string(f.points()) + " points");
    if (compose(generator, f.sigma) != compose(f.sigma, generator) ||
        compose(generator, f.tau) != compose(f.tau, generator))
        throw ValidationError("action generator " + generator.str() +
                              " is not a symmetry of the atom");
    const int ord = generator.order();
    return AtomAction{std::move(f), std::move(generator), ord};
}

int rank0_fixed_count(const AtomAction& a, long long power) {
    const Perm g = a.generator.power(power);
    int fixed = 0;
    for (int x = 0; x < a.atom.points(); ++x) {
        const int y = a.atom.tau[x];
        if (x > y) continue;  // visit each tau-orbit once
        if (g[x] == x || g[x] == y) ++fixed;
    }
    return fixed;
}

FGraph quotient_atom(const FGraph& f, const PermutationGroup& h) {
    FGraph g = validated(f);
    if (h.degree() != g.points())
        throw ValidationError("subgroup degree " + std::to_string(h.degree()) +
                              " does not match atom on " + std::to_string(g.points()) + " points");
    const PermutationGroup sym = symmetry_group(g);
    for (const Perm& p : h.elements()) {
        if (!sym.contains(p))
            throw ValidationError("quotient subgroup element " + p.str() +
                                  " is not a symmetry of the atom");
        if (p.is_identity()) continue;
        for (int x = 0; x < g.points(); ++x) {
            if (p[x] == x)
                throw ValidationError("non-free action: element " + p.str() + " fixes point " +
                                      std::to_string(x));
            if (p[x] == g.tau[x])
                throw ValidationError("non-free action: element " + p.str() +
                                      " fixes the rank-0 point {" + std::to_string(std::min(x, g.tau[x])) +
                                      "," + std::to_string(std::max(x, g.tau[x])) + "}");
        }
    }
    const int d = g.points();
    std::vector<int> orbit(d, -1);
    int norbits = 0;
    for (int x = 0; x < d; ++x) {
        if (orbit[x] >= 0) continue;
        for (const Perm& p : h.elements()) orbit[p[x]] = norbits;
        ++norbits;
    }
    if (norbits * h.order() != d)
        throw InternalError("orbit count does not match a free action");
    std::vector<int> sigma_q(norbits, -1), tau_q(norbits, -1);
    for (int x = 0; x < d; ++x) {
        sigma_q[orbit[x]] = orbit[g.sigma[x]];
        tau_q[orbit[x]] = orbit[g.tau[x]];
    }
    return validated(FGraph{norbits / 2, Perm(std::move(sigma_q)), Perm(std::move(tau_q))});
}

}  // namespace atlas
