#include <doctest.h>

#include <set>

#include "curvecat/classifier.hpp"
#include "curvecat/kulkarni.hpp"
#include "curvecat/errors.hpp"
#include "curvecat/pardini.hpp"
#include "oracles.hpp"

using namespace curvecat;

namespace {

GroupElement el(std::vector<Int> residues) { return GroupElement{std::move(residues)}; }

bool contains_vector(const std::vector<GeneratingVector>& vecs,
                     const std::vector<GroupElement>& elements) {
    for (const auto& v : vecs)
        if (v.elements == elements) return true;
    return false;
}

}  // namespace

TEST_CASE("order bounds from the divisibility window") {
    OrderBounds b = order_bounds(Signature::sphere({2, 2, 3, 3}));
    CHECK(b.lower == 6);
    CHECK(b.upper == 6);
    CHECK(admissible_orders(b) == std::vector<Int>{6});

    b = order_bounds(Signature::sphere({2, 2, 3, 4}));
    CHECK(b.lower == 12);
    CHECK(b.upper == 4);
    CHECK(admissible_orders(b).empty());

    b = order_bounds(Signature::sphere({3, 6, 6}));
    CHECK(b.lower == 6);
    CHECK(b.upper == 18);
    CHECK(admissible_orders(b) == std::vector<Int>{6, 18});

    CHECK_THROWS_AS(order_bounds(Signature(1, {2, 2, 2})), domain_error);
    CHECK_THROWS_AS(order_bounds(Signature::sphere({2, 2})), domain_error);
}

TEST_CASE("generating vector search") {
    auto z9 = AbelianGroup::cyclic(9);
    auto vecs = find_generating_vectors(z9, Signature::sphere({3, 9, 9}), false);
    CHECK(!vecs.empty());
    CHECK(contains_vector(vecs, {el({3}), el({1}), el({5})}));
    for (const auto& v : vecs) v.validate();

    CHECK(find_generating_vectors(z9, Signature::sphere({3, 3, 9}), false).empty());

    auto z44 = AbelianGroup({4, 4});
    auto vecs44 = find_generating_vectors(z44, Signature::sphere({4, 4, 4}), false);
    CHECK(contains_vector(vecs44, {el({1, 0}), el({0, 1}), el({3, 3})}));
}

TEST_CASE("canonical representatives are unique orbit minima") {
    auto z44 = AbelianGroup({4, 4});
    Signature sig = Signature::sphere({4, 4, 4});
    auto all = find_generating_vectors(z44, sig, false);
    auto reps = find_generating_vectors(z44, sig, true);
    CHECK(!reps.empty());
    CHECK(reps.size() <= all.size());
    std::set<std::vector<Int>> keys;
    for (const auto& rep : reps) {
        rep.validate();
        // a canonical representative is the minimum of its own orbit
        std::vector<Int> flat;
        for (const auto& e : rep.elements) flat.insert(flat.end(), e.residues.begin(), e.residues.end());
        CHECK(canonical_vector_key(rep) == flat);
        keys.insert(flat);
    }
    CHECK(keys.size() == reps.size());
    // every raw vector canonicalizes onto one of the representatives
    for (const auto& v : all) CHECK(keys.count(canonical_vector_key(v)) == 1);
}

TEST_CASE("vector search errors") {
    CHECK_THROWS_AS(
        find_generating_vectors(AbelianGroup({4, 4}), Signature::sphere({4, 4, 4}), false, {10}),
        capacity_error);
    CHECK_THROWS_AS(find_generating_vectors(AbelianGroup({4, 4}), Signature::sphere({4, 4}), false),
                    domain_error);
}

TEST_CASE("classification at genus 2 matches the six known actions") {
    auto cases = classify_abelian(2);
    std::set<std::pair<std::vector<Int>, std::vector<Int>>> got;
    for (const auto& c : cases) {
        CHECK(c.genus == 2);
        got.insert({c.group.invariant_factors(), c.signature.indices});
    }
    std::set<std::pair<std::vector<Int>, std::vector<Int>>> expected = {
        {{6}, {2, 2, 3, 3}}, {{10}, {2, 5, 10}}, {{8}, {2, 8, 8}},
        {{2, 6}, {2, 6, 6}}, {{6}, {3, 6, 6}},   {{5}, {5, 5, 5}}};
    CHECK(got == expected);
    CHECK(cases.size() == 6);
}

TEST_CASE("the {2,2,2,n} family admits no abelian action") {
    for (const auto& c : classify_abelian(12)) {
        if (c.signature.branch_count() != 4) continue;
        CHECK(c.signature.indices == std::vector<Int>{2, 2, 3, 3});
    }
}

TEST_CASE("genus 7 includes the rank-two exceptional action on {3,9,9}") {
    bool found = false;
    for (const auto& c : classify_abelian(7))
        if (c.genus == 7 && c.group == AbelianGroup({3, 9}) &&
            c.signature == Signature::sphere({3, 9, 9}))
            found = true;
    CHECK(found);
}

TEST_CASE("any s-1 stabilizers generate, and cyclic orders obey the lcm rule") {
    for (const auto& c : classify_abelian(10)) {
        const auto& v = c.vector;
        const std::size_t s = v.elements.size();
        for (std::size_t j0 = 0; j0 < s; ++j0) {
            std::vector<GroupElement> rest;
            for (std::size_t i = 0; i < s; ++i)
                if (i != j0) rest.push_back(v.elements[i]);
            CHECK(c.group.subgroup_order(rest) == c.group.order());
            if (c.group.is_cyclic()) {
                Int l = 1;
                for (std::size_t i = 0; i < s; ++i)
                    if (i != j0) l = lcm(l, v.target_orders[i]);
                CHECK(l == c.group.order());
            }
        }
    }
}

TEST_CASE("cyclic existence agrees with the congruence route") {
    // Dual routes: element search in Z_n vs alpha-tuple congruence solving.
    auto table = enumerate_large_signatures();
    Int pairs = 0;
    for (const auto& sig : table.expand_all(100)) {
        Int l = 1;
        for (Int e : sig.indices) l = lcm(l, e);
        for (Int n = l; n <= 100; n += l) {
            bool vectors = !find_generating_vectors(AbelianGroup::cyclic(n), sig, false).empty();
            bool congruence = !solve_cyclic(n, sig.indices).empty();
            CHECK(vectors == congruence);
            ++pairs;
        }
    }
    CHECK(pairs > 200);
}

TEST_CASE("worker partitioning does not change the classification") {
    auto one = classify_abelian(8, {1, AbelianGroup::kDefaultBruteBound});
    auto three = classify_abelian(8, {3, AbelianGroup::kDefaultBruteBound});
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].group == three[i].group);
        CHECK(one[i].signature == three[i].signature);
        CHECK(one[i].genus == three[i].genus);
        CHECK(one[i].vector == three[i].vector);
    }
}

TEST_CASE("classification rejects max_genus below 2") {
    CHECK_THROWS_AS(classify_abelian(1), domain_error);
}

TEST_CASE("classification refuses sweeps past the candidate budget") {
    CHECK_THROWS_AS(classify_abelian(99999999), capacity_error);
}
