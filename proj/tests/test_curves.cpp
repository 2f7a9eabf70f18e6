#include <doctest.h>

#include <algorithm>

#include "curvecat/catalog.hpp"
#include "curvecat/errors.hpp"

using namespace curvecat;

namespace {

GroupElement el(std::vector<Int> residues) { return GroupElement{std::move(residues)}; }

CurveModel cyclic_model(Int n, std::vector<Int> indices, std::vector<Int> alphas, Int degree) {
    auto data = cyclic_building_data(AbelianGroup::cyclic(n),
                                     Signature::sphere(std::move(indices)),
                                     CyclicSolution{std::move(alphas), degree});
    return emit_model(data);
}

const ClassificationEntry& entry_for(const ClassificationCatalog& catalog,
                                     const AbelianGroup& group, const Signature& sig) {
    for (const auto& e : catalog.entries)
        if (e.group == group && e.signature == sig) return e;
    REQUIRE(false);
    static ClassificationEntry dummy;
    return dummy;
}

const ClassificationCatalog& catalog8() {
    static const ClassificationCatalog c = build_classification(8);
    return c;
}

}  // namespace

TEST_CASE("plane model for the doubled cyclic family at genus 2") {
    CurveModel m = cyclic_model(10, {2, 5, 10}, {1, 1, 3}, 1);
    CHECK(m.ambient == Ambient::Plane);
    CHECK(m.y_weight == 1);
    REQUIRE(m.equations.size() == 1);
    CHECK(m.equations[0].left_exponent == 10);
    CHECK(m.equations[0].exponents == std::vector<Int>{5, 2, 3});
    CHECK(render_equation(m, m.equations[0]) == "y^10 = x^5*(x-z)^2*z^3");
    CHECK(!m.has_lambda);
}

TEST_CASE("weighted model for the four-branch family") {
    CurveModel m = cyclic_model(6, {2, 2, 3, 3}, {1, 1, 1, 2}, 2);
    CHECK(m.ambient == Ambient::WeightedPlane);
    CHECK(m.y_weight == 2);
    REQUIRE(m.equations.size() == 1);
    std::vector<Int> exps = m.equations[0].exponents;
    std::sort(exps.begin(), exps.end());
    CHECK(exps == std::vector<Int>{2, 3, 3, 4});
    CHECK(m.has_lambda);
    CHECK(m.lambda_excluded == std::vector<Int>{0, 1});
    CHECK(render_equation(m, m.equations[0]) == "y^6 = x^3*(x-z)^3*z^2*(x-lambda*z)^4");
}

TEST_CASE("pair model for the rank-two family at genus 2") {
    const auto& e = entry_for(catalog8(), AbelianGroup({2, 6}), Signature::sphere({2, 6, 6}));
    CHECK(e.model.ambient == Ambient::Pair);
    REQUIRE(e.model.equations.size() == 2);
    CHECK(render_equation(e.model, e.model.equations[0]) == "y^2 = x*z");
    CHECK(render_equation(e.model, e.model.equations[1]) == "w^6 = (x-z)*z^5");
}

TEST_CASE("branch indices recovered from exponents") {
    CHECK(branch_indices_of_model(cyclic_model(10, {2, 5, 10}, {1, 1, 3}, 1)) ==
          std::vector<Int>{2, 5, 10});
    // y^21 = x^7 (x-z)^3 z^11
    CHECK(branch_indices_of_model(cyclic_model(21, {3, 7, 21}, {1, 1, 11}, 1)) ==
          std::vector<Int>{3, 7, 21});
    CHECK(branch_indices_of_model(cyclic_model(6, {2, 2, 3, 3}, {1, 1, 1, 2}, 2)) ==
          std::vector<Int>{2, 2, 3, 3});
}

TEST_CASE("genus recomputed from models") {
    CHECK(genus_of_model(cyclic_model(12, {3, 4, 12}, {1, 1, 5}, 1), 12) == 3);
    CHECK(genus_of_model(cyclic_model(5, {5, 5, 5}, {1, 1, 3}, 1), 5) == 2);
    const auto& e = entry_for(catalog8(), AbelianGroup({5, 5}), Signature::sphere({5, 5, 5}));
    CHECK(genus_of_model(e.model, 25) == 6);
}

TEST_CASE("emission is verified: corrupt building data cannot emit") {
    auto data = cyclic_building_data(AbelianGroup::cyclic(10), Signature::sphere({2, 5, 10}),
                                     CyclicSolution{{1, 1, 3}, 1});
    data.signature = Signature::sphere({2, 5, 5});  // branch data no longer matches
    CHECK_THROWS(emit_model(data));
}

TEST_CASE("fixed point counts") {
    const auto& row1 =
        entry_for(catalog8(), AbelianGroup::cyclic(10), Signature::sphere({2, 5, 10}));
    // tau = 5 lies in the order-2 and order-10 stabilizers: 10/2 + 10/10
    CHECK(fixed_point_count(row1.vector, el({5})) == 6);

    const auto& row3 =
        entry_for(catalog8(), AbelianGroup::cyclic(12), Signature::sphere({3, 4, 12}));
    // tau = 6 lies in the order-4 and order-12 stabilizers: 12/4 + 12/12
    CHECK(fixed_point_count(row3.vector, el({6})) == 4);
    CHECK(2 * row3.genus + 2 == 8);

    CHECK_THROWS_AS(fixed_point_count(row1.vector, el({0})), domain_error);
}

TEST_CASE("total ramification identity") {
    for (const auto& e : catalog8().entries) {
        Int total = 0;
        for (Int i = 1; i < e.group.order(); ++i)
            total += fixed_point_count(e.vector, e.group.element_at(i));
        Int expected = 0;
        for (Int ei : e.signature.indices) expected += (e.group.order() / ei) * (ei - 1);
        CHECK(total == expected);
    }
}

TEST_CASE("hyperellipticity verdicts across the catalog") {
    // infinite families: always hyperelliptic
    for (const auto& e : catalog8().entries) {
        ClassifiedCase c{e.group, e.signature, e.genus, e.vector};
        switch (table_row_of(c)) {
            case TableRow::CyclicTwice:
            case TableRow::CyclicFour:
            case TableRow::RankTwo:
            case TableRow::FourBranch: CHECK(e.hyperelliptic); break;
            case TableRow::Exceptional: CHECK(e.hyperelliptic == (e.genus == 2)); break;
        }
    }
}

TEST_CASE("exceptional actions of genus at least 3 are not hyperelliptic") {
    auto catalog = build_classification(7);
    // groups of odd order contain no involution at all
    for (const auto& e : catalog.entries)
        if (e.group.order() % 2 == 1 && e.genus >= 3) {
            CHECK(e.group.involutions().empty());
            CHECK(!e.hyperelliptic);
        }
    // the even-order exceptional actions have involutions with too few fixed points
    const auto& z3z6 = entry_for(catalog, AbelianGroup({3, 6}), Signature::sphere({3, 6, 6}));
    CHECK(!z3z6.hyperelliptic);
    for (const auto& tau : z3z6.group.involutions())
        CHECK(fixed_point_count(z3z6.vector, tau) != 2 * z3z6.genus + 2);
    const auto& z4z4 = entry_for(catalog, AbelianGroup({4, 4}), Signature::sphere({4, 4, 4}));
    CHECK(!z4z4.hyperelliptic);
    for (const auto& tau : z4z4.group.involutions())
        CHECK(fixed_point_count(z4z4.vector, tau) != 2 * z4z4.genus + 2);
}

TEST_CASE("genus two short-circuits to hyperelliptic") {
    for (const auto& e : catalog8().entries)
        if (e.genus == 2) CHECK(e.hyperelliptic);
}

TEST_CASE("genus at least 8 forces hyperelliptic") {
    auto catalog = build_classification(12);
    Int seen = 0;
    for (const auto& e : catalog.entries)
        if (e.genus >= 8) {
            CHECK(e.hyperelliptic);
            ++seen;
        }
    CHECK(seen >= 15);  // three families per genus from 8 to 12
}

TEST_CASE("every emitted model is weighted-homogeneous and round-trips") {
    for (const auto& e : catalog8().entries) {
        for (const auto& eq : e.model.equations) {
            Int total = 0;
            for (Int c : eq.exponents) total += c;
            CHECK(total == eq.left_exponent * eq.weight);
        }
        CHECK(branch_indices_of_model(e.model) == e.signature.indices);
        CHECK(genus_of_model(e.model, e.group.order()) == e.genus);
    }
}

TEST_CASE("branch coordinates are the fixed list") {
    auto pts = branch_coordinates(4);
    CHECK(pts[0].factor() == "x");
    CHECK(pts[1].factor() == "(x-z)");
    CHECK(pts[2].factor() == "z");
    CHECK(pts[3].factor() == "(x-lambda*z)");
    CHECK_THROWS_AS(branch_coordinates(5), domain_error);
}
