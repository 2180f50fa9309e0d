#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "atlas/errors.hpp"
#include "atlas/permutation.hpp"

using namespace atlas;

namespace {

Perm P(std::vector<int> v) { return Perm(std::move(v)); }

// Brute-force closure used as an independent check against generate().
std::set<std::vector<int>> closure_by_hand(int degree, const std::vector<Perm>& gens) {
    std::set<std::vector<int>> elems{Perm::identity(degree).images()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(elems.begin(), elems.end());
        for (const auto& a : snapshot)
            for (const Perm& g : gens) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = g[a[i]];
                if (elems.insert(prod).second) grew = true;
            }
    }
    return elems;
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(P({0, 0}), ValidationError);
    CHECK_THROWS_AS(P({1, 2}), ValidationError);
    CHECK_THROWS_AS(P({-1, 0}), ValidationError);
    CHECK(P({1, 0}).degree() == 2);
}

TEST_CASE("composition applies the right factor first") {
    const Perm a = P({1, 2, 0});
    const Perm b = P({0, 2, 1});
    const Perm ab = compose(a, b);
    for (int i = 0; i < 3; ++i) CHECK(ab[i] == a[b[i]]);
    CHECK(compose(a, a.inverse()).is_identity());
}

TEST_CASE("orders and powers") {
    CHECK(P({1, 0}).order() == 2);
    CHECK(P({1, 2, 3, 0}).order() == 4);
    CHECK(P({1, 0, 3, 4, 2}).order() == 6);
    CHECK(P({1, 2, 3, 0}).power(2) == P({2, 3, 0, 1}));
    CHECK(P({1, 2, 3, 0}).power(-1) == P({3, 0, 1, 2}));
}

TEST_CASE("generate: single involution gives order 2") {
    const auto g = PermutationGroup::generate(2, {P({1, 0})});
    CHECK(g.order() == 2);
}

TEST_CASE("generate: a 4-cycle closes to order 4") {
    const auto g = PermutationGroup::generate(4, {P({1, 2, 3, 0})});
    CHECK(g.order() == 4);
    CHECK(g.max_element_order() == 4);
}

TEST_CASE("generate: two commuting involutions give the Klein group") {
    const auto g = PermutationGroup::generate(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})});
    CHECK(g.order() == 4);
    for (const Perm& p : g.elements())
        if (!p.is_identity()) CHECK(p.order() == 2);
    CHECK(closure_by_hand(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})}).size() == 4);
}

TEST_CASE("generate rejects malformed generators") {
    CHECK_THROWS_AS(PermutationGroup::generate(3, {P({1, 0})}), ValidationError);
}

TEST_CASE("iso_type names") {
    CHECK(iso_type(PermutationGroup::trivial(3)).name == "e");
    CHECK(iso_type(PermutationGroup::generate(4, {P({1, 2, 3, 0})})).name == "Z4");
    CHECK(iso_type(PermutationGroup::generate(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})})).name ==
          "Z2+Z2");
    const auto s3 = PermutationGroup::generate(3, {P({1, 0, 2}), P({1, 2, 0})});
    CHECK(s3.order() == 6);
    CHECK(iso_type(s3).name == "S3");
    CHECK_FALSE(iso_type(s3).abelian);
    const auto z6 = PermutationGroup::generate(5, {P({1, 0, 3, 4, 2})});
    CHECK(iso_type(z6).name == "Z6");
    // order 8 dihedral falls back
    const auto d4 = PermutationGroup::generate(4, {P({1, 2, 3, 0}), P({3, 2, 1, 0})});
    CHECK(d4.order() == 8);
    CHECK(iso_type(d4).name == "order-8");
    CHECK_FALSE(iso_type(d4).abelian);
}

TEST_CASE("iso_type is stable under whole-group conjugation") {
    std::mt19937 rng(12345);
    const auto groups = {PermutationGroup::generate(4, {P({1, 2, 3, 0})}),
                         PermutationGroup::generate(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})}),
                         PermutationGroup::generate(4, {P({1, 2, 0, 3})})};
    for (const auto& g : groups) {
        std::vector<int> img(4);
        std::iota(img.begin(), img.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(img.begin(), img.end(), rng);
            const Perm c = P(img);
            std::vector<Perm> conj;
            for (const Perm& p : g.elements()) conj.push_back(conjugate(p, c));
            const auto h = PermutationGroup::from_elements(4, conj);
            CHECK(iso_type(h) == iso_type(g));
        }
    }
}

TEST_CASE("cyclic subgroups of the Klein group") {
    const auto g = PermutationGroup::generate(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})});
    const auto subs = cyclic_subgroups(g);
    CHECK(subs.size() == 4);
    int order1 = 0, order2 = 0;
    for (const auto& h : subs) (h.order() == 1 ? order1 : order2)++;
    CHECK(order1 == 1);
    CHECK(order2 == 3);
}

TEST_CASE("cyclic subgroups of Z4 and S3") {
    const auto z4 = PermutationGroup::generate(4, {P({1, 2, 3, 0})});
    const auto subs = cyclic_subgroups(z4);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].order() == 1);
    CHECK(subs[1].order() == 2);
    CHECK(subs[2].order() == 4);

    const auto s3 = PermutationGroup::generate(3, {P({1, 0, 2}), P({1, 2, 0})});
    const auto s3subs = cyclic_subgroups(s3);
    CHECK(s3subs.size() == 5);  // trivial + three Z2 + one Z3
    int two = 0, three = 0;
    for (const auto& h : s3subs) {
        if (h.order() == 2) ++two;
        if (h.order() == 3) ++three;
    }
    CHECK(two == 3);
    CHECK(three == 1);
}

TEST_CASE("Lagrange: cyclic subgroup orders divide the group order") {
    const auto groups = {PermutationGroup::generate(4, {P({1, 2, 3, 0}), P({1, 0, 3, 2})}),
                         PermutationGroup::generate(3, {P({1, 0, 2}), P({1, 2, 0})}),
                         PermutationGroup::generate(6, {P({1, 2, 3, 4, 5, 0})})};
    for (const auto& g : groups)
        for (const auto& h : cyclic_subgroups(g)) CHECK(g.order() % h.order() == 0);
}

TEST_CASE("are_conjugate") {
    const auto h = PermutationGroup::generate(4, {P({1, 0, 3, 2})});
    CHECK(are_conjugate(h, h, {Perm::identity(4)}));

    // the three order-2 subgroups of the Klein group are pairwise
    // non-conjugate inside it
    const auto klein = PermutationGroup::generate(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})});
    const auto subs = cyclic_subgroups(klein);
    for (size_t i = 1; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j)
            CHECK_FALSE(are_conjugate(subs[i], subs[j], klein.elements()));

    const auto h1 = PermutationGroup::generate(4, {P({1, 0, 3, 2})});
    const auto h2 = PermutationGroup::generate(4, {P({3, 2, 1, 0})});
    CHECK(are_conjugate(h1, h2, {P({2, 1, 0, 3})}));
    CHECK_FALSE(are_conjugate(h1, h2, {Perm::identity(4)}));
    CHECK_THROWS_AS(are_conjugate(h1, PermutationGroup::trivial(3), {Perm::identity(4)}),
                    ValidationError);
}
