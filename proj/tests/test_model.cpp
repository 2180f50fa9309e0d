#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "atlas/errors.hpp"
#include "atlas/model.hpp"

using namespace atlas;

namespace {

Perm P(std::vector<int> v) { return Perm(std::move(v)); }

FGraph named(const std::string& name) { return *resolve_atom_name(name); }

ProductElement elem(std::vector<int> perm, int n, int shift, Fraction angle = Fraction()) {
    return ProductElement{P(std::move(perm)), shift_automorphism(n, shift, angle)};
}

SimpleMinimalModel direct_product(const std::string& atom, int n) {
    const FGraph f = named(atom);
    return make_simple_minimal_model(f, n, 1, Perm::identity(f.points()));
}

SimpleMinimalModel quotient_model(const std::string& atom, int n, int k, std::vector<int> gen) {
    return make_simple_minimal_model(named(atom), n, k, P(std::move(gen)));
}

FGraph relabel(const FGraph& f, const Perm& p) {
    return FGraph{f.m, conjugate(f.sigma, p), conjugate(f.tau, p)};
}

}  // namespace

TEST_CASE("build accepts the catalogued products") {
    // involution paired with the focus shift
    const auto b2 = build_product(named("B"), 2, {elem({1, 0}, 2, 1)});
    CHECK(b2.elements.size() == 2);

    // free involution paired with a pure angle
    const auto d1 = build_product(named("D1"), 1, {elem({1, 0, 3, 2}, 1, 0, Fraction(1, 2))});
    CHECK(d1.elements.size() == 2);

    // empty generator set: the direct product
    CHECK(build_product(named("C2"), 3, {}).elements.size() == 1);
}

TEST_CASE("build rejects non-free actions with a witness") {
    // B's involution keeps the saddle, the angle flow keeps x0
    CHECK_THROWS_WITH_AS(build_product(named("B"), 1, {elem({1, 0}, 1, 0, Fraction(1, 2))}),
                         doctest::Contains("rank-0 point"), ValidationError);
    // z-rotation of C2 with no shift pins both saddles
    CHECK_THROWS_WITH_AS(build_product(named("C2"), 2, {elem({2, 3, 0, 1}, 2, 0, Fraction(1, 2))}),
                         doctest::Contains("non-free"), ValidationError);
    // pure angle on the trivial atom part
    CHECK_THROWS_WITH_AS(build_product(named("B"), 2, {elem({0, 1}, 2, 0, Fraction(1, 3))}),
                         doctest::Contains("fixes the whole atom"), ValidationError);
}

TEST_CASE("build validates generators") {
    // not a symmetry of the atom
    CHECK_THROWS_AS(build_product(named("D2"), 1, {elem({1, 0, 3, 2}, 1, 0, Fraction(1, 2))}),
                    ValidationError);
    // focus part over the wrong complexity
    CHECK_THROWS_AS(build_product(named("B"), 2, {elem({1, 0}, 4, 1)}), ValidationError);
    // degree mismatch
    CHECK_THROWS_AS(build_product(named("C2"), 2, {elem({1, 0}, 2, 1)}), ValidationError);
}

TEST_CASE("simple minimal model validation") {
    CHECK_NOTHROW(quotient_model("C1", 4, 4, {1, 2, 3, 0}));
    // group order must divide the focus complexity
    CHECK_THROWS_AS(quotient_model("C1", 3, 4, {1, 2, 3, 0}), ValidationError);
    // generator must have the exact order
    CHECK_THROWS_AS(quotient_model("C1", 2, 2, {1, 2, 3, 0}), ValidationError);
    // generator must be a symmetry
    CHECK_THROWS_AS(quotient_model("D2", 2, 2, {1, 0, 3, 2}), ValidationError);
}

TEST_CASE("reduce: half-period quotient of D1 collapses to the direct product over B") {
    const auto adp = build_product(named("D1"), 1, {elem({1, 0, 3, 2}, 1, 0, Fraction(1, 2))});
    const auto [model, report] = reduce(adp);
    CHECK(report.group_order == 2);
    CHECK(report.normal_order == 2);
    CHECK(report.m_reduced == 1);
    CHECK(report.n_reduced == 1);
    CHECK(report.k == 1);
    CHECK(model.k == 1);
    CHECK(model.n == 1);
    CHECK(identify(model.atom) == "B");
}

TEST_CASE("reduce: Klein action on C2 x F2 collapses to (B x F2)/Z2") {
    const auto adp = build_product(
        named("C2"), 2, {elem({1, 0, 3, 2}, 2, 0, Fraction(1, 2)), elem({2, 3, 0, 1}, 2, 1)});
    CHECK(adp.elements.size() == 4);
    const auto [model, report] = reduce(adp);
    CHECK(report.normal_order == 2);
    CHECK(report.m_reduced == 1);
    CHECK(report.n_reduced == 2);
    CHECK(report.k == 2);
    CHECK(identify(model.atom) == "B");
    CHECK(model.n == 2);
    CHECK(model.k == 2);
    CHECK(model.generator.order() == 2);
    CHECK(model.shift() == 1);
}

TEST_CASE("reduce: a pure focus rotation factors out of the direct product") {
    const auto adp = build_product(named("C2"), 4, {elem({0, 1, 2, 3}, 4, 1)});
    const auto [model, report] = reduce(adp);
    CHECK(report.normal_order == 4);
    CHECK(report.k == 1);
    CHECK(identify(model.atom) == "C2");
    CHECK(model.n == 1);
}

TEST_CASE("reduce is idempotent on simple minimal models") {
    const std::vector<SimpleMinimalModel> models = {
        direct_product("B", 1),
        quotient_model("B", 2, 2, {1, 0}),
        quotient_model("C1", 4, 4, {1, 2, 3, 0}),
        quotient_model("C2", 2, 2, {1, 0, 3, 2}),
        quotient_model("C2", 2, 2, {2, 3, 0, 1}),
        quotient_model("E1", 6, 6, {4, 5, 3, 1, 2, 0}),
    };
    for (const auto& m : models) {
        const auto [reduced, report] = reduce(as_product(m));
        CHECK(report.normal_order == 1);
        CHECK(reduced == m);
    }
}

TEST_CASE("rank0 counts") {
    CHECK(rank0_count(direct_product("B", 1)) == 1);
    CHECK(rank0_count(quotient_model("B", 2, 2, {1, 0})) == 1);
    CHECK(rank0_count(quotient_model("C1", 4, 4, {1, 2, 3, 0})) == 2);
    CHECK(rank0_count(direct_product("E1", 2)) == 6);
}

TEST_CASE("m1 decomposition") {
    CHECK(m1_decomposition(quotient_model("B", 4, 2, {1, 0})) ==
          std::pair<std::string, int>{"B", 2});
    CHECK(m1_decomposition(direct_product("B", 1)) == std::pair<std::string, int>{"B", 1});
    CHECK(m1_decomposition(quotient_model("E1", 6, 6, {4, 5, 3, 1, 2, 0})) ==
          std::pair<std::string, int>{"E1", 1});
}

TEST_CASE("m2 decomposition") {
    using Pieces = std::vector<std::pair<int, int>>;
    CHECK(m2_decomposition(direct_product("C2", 1)) == Pieces{{1, 2}});
    CHECK(m2_decomposition(quotient_model("B", 2, 2, {1, 0})) == Pieces{{1, 1}});
    CHECK(m2_decomposition(quotient_model("E1", 3, 3, {1, 2, 0, 4, 5, 3})) == Pieces{{3, 1}});
    // the two involution families of C2 split differently
    CHECK(m2_decomposition(quotient_model("C2", 2, 2, {1, 0, 3, 2})) == Pieces{{2, 1}});
    CHECK(m2_decomposition(quotient_model("C2", 2, 2, {2, 3, 0, 1})) == Pieces{{1, 2}});
}

TEST_CASE("half-turn fixed counts") {
    CHECK(half_turn_fixed_count(direct_product("C2", 1)) == 0);  // k = 1
    CHECK(half_turn_fixed_count(quotient_model("B", 2, 2, {1, 0})) == 1);
    CHECK(half_turn_fixed_count(quotient_model("C2", 2, 2, {1, 0, 3, 2})) == 0);
    CHECK(half_turn_fixed_count(quotient_model("C2", 2, 2, {2, 3, 0, 1})) == 2);
    CHECK(half_turn_fixed_count(quotient_model("C1", 4, 4, {1, 2, 3, 0})) == 2);
    CHECK(half_turn_fixed_count(quotient_model("E1", 3, 3, {1, 2, 0, 4, 5, 3})) == 0);  // odd k
}

TEST_CASE("torus counts") {
    CHECK(torus_counts(direct_product("B", 1)) == std::pair<int, int>{1, 2});
    CHECK(torus_counts(quotient_model("B", 2, 2, {1, 0})) == std::pair<int, int>{1, 1});
    CHECK(torus_counts(direct_product("C2", 1)) == std::pair<int, int>{2, 2});
    CHECK(torus_counts(quotient_model("C2", 2, 2, {2, 3, 0, 1})) == std::pair<int, int>{1, 1});
}

TEST_CASE("chain fixtures") {
    using Chains = std::vector<std::pair<int, int>>;
    CHECK(chain_invariant(direct_product("C1", 1)) == Chains{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(chain_invariant(quotient_model("C1", 2, 2, {2, 3, 0, 1})) == Chains{{2, 2}, {2, 2}});
    CHECK(chain_invariant(direct_product("B", 1)) == Chains{{1, 1}, {1, 1}});
}

TEST_CASE("fingerprints separate the two C2 x F2 quotients by fixed saddles") {
    const auto rx = fingerprint(quotient_model("C2", 2, 2, {1, 0, 3, 2}));
    const auto rz = fingerprint(quotient_model("C2", 2, 2, {2, 3, 0, 1}));
    CHECK(rx != rz);
    CHECK(rx.s == 0);
    CHECK(rz.s == 2);
    CHECK(rx.atom_canonical == rz.atom_canonical);
    CHECK(rx.n == rz.n);
    CHECK(rx.k == rz.k);
    CHECK(rx.m1_name == rz.m1_name);
}

TEST_CASE("fingerprints of B x F1 and (B x F2)/Z2 differ in n and tori") {
    const auto a = fingerprint(direct_product("B", 1));
    const auto b = fingerprint(quotient_model("B", 2, 2, {1, 0}));
    CHECK(a.n != b.n);
    CHECK(a.torus != b.torus);
}

TEST_CASE("fingerprint is invariant under relabelling") {
    std::mt19937 rng(2024);
    const std::vector<SimpleMinimalModel> models = {
        quotient_model("C2", 2, 2, {1, 0, 3, 2}),
        quotient_model("C1", 4, 4, {1, 2, 3, 0}),
        quotient_model("B", 2, 2, {1, 0}),
        quotient_model("E1", 6, 6, {4, 5, 3, 1, 2, 0}),
    };
    for (const auto& model : models) {
        const Fingerprint expect = fingerprint(model);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> img(model.atom.points());
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            const Perm p(img);
            const SimpleMinimalModel moved = make_simple_minimal_model(
                relabel(model.atom, p), model.n, model.k, conjugate(model.generator, p));
            CHECK(fingerprint(moved) == expect);
        }
    }
}
