#include "curvecat/curves.hpp"

#include <algorithm>

#include "curvecat/errors.hpp"

namespace curvecat {

std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::Plane: return "plane";
        case Ambient::WeightedPlane: return "weighted_plane";
        case Ambient::Pair: return "pair";
    }
    return "?";
}

std::string BranchCoordinate::factor() const {
    if (is_lambda) return "(x-lambda*z)";
    if (x == 0) return "x";
    if (z == 0) return "z";
    return "(x-z)";
}

std::vector<BranchCoordinate> branch_coordinates(std::size_t count) {
    static const std::vector<BranchCoordinate> fixed = {
        {0, 1, false}, {1, 1, false}, {1, 0, false}, {0, 1, true}};
    if (count > fixed.size()) throw domain_error("more than four branch points are out of scope");
    return {fixed.begin(), fixed.begin() + static_cast<long>(count)};
}

std::string render_equation(const CurveModel& model, const ModelEquation& eq) {
    std::string rhs;
    for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
        Int c = eq.exponents[i];
        if (c == 0) continue;
        if (!rhs.empty()) rhs += "*";
        rhs += model.points[i].factor();
        if (c != 1) rhs += "^" + std::to_string(c);
    }
    if (rhs.empty()) rhs = "1";
    return eq.lhs + "^" + std::to_string(eq.left_exponent) + " = " + rhs;
}

namespace {

void check_homogeneous(const ModelEquation& eq) {
    Int total = 0;
    for (Int c : eq.exponents) total = checked_add(total, c);
    if (checked_mul(eq.left_exponent, eq.weight) != total)
        throw consistency_error("equation is not weighted-homogeneous");
}

}  // namespace

CurveModel emit_model(const ReducedBuildingData& data) {
    data.validate();
    const auto& e = data.signature.indices;
    const std::size_t s = e.size();
    const std::size_t k = data.character_orders.size();
    if (k < 1 || k > 2) throw state_error("model emission supports one or two characters");

    CurveModel model;
    model.points = branch_coordinates(s);
    model.has_lambda = s == 4;
    if (model.has_lambda) model.lambda_excluded = {0, 1};

    static const char* kLhs[2] = {"y", "w"};
    for (std::size_t j = 0; j < k; ++j) {
        ModelEquation eq;
        eq.lhs = kLhs[j];
        eq.left_exponent = data.character_orders[j];
        eq.weight = data.degrees[j];
        for (std::size_t i = 0; i < s; ++i) {
            Int c = checked_mul(data.character_orders[j], data.exponent_matrix[i][j]) / e[i];
            eq.exponents.push_back(c);
        }
        check_homogeneous(eq);
        model.equations.push_back(std::move(eq));
    }

    if (k == 2) {
        model.ambient = Ambient::Pair;
        model.y_weight = 1;
    } else {
        model.y_weight = data.degrees[0];
        model.ambient = model.y_weight == 1 ? Ambient::Plane : Ambient::WeightedPlane;
    }

    // Mandatory verification: the equations must hand back exactly the
    // branch data they were built from.
    if (branch_indices_of_model(model) != data.signature.indices)
        throw consistency_error("emitted model fails branch-index round-trip");
    Int order = data.group.order();
    auto genus = genus_from_order(data.signature, order);
    if (!genus || genus_of_model(model, order) != *genus)
        throw consistency_error("emitted model fails genus verification");
    return model;
}

std::vector<Int> branch_indices_of_model(const CurveModel& model) {
    std::vector<Int> indices;
    for (std::size_t i = 0; i < model.points.size(); ++i) {
        Int idx = 1;
        for (const auto& eq : model.equations) {
            Int d = eq.left_exponent;
            idx = lcm(idx, d / gcd(eq.exponents[i], d));
        }
        indices.push_back(idx);
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

Int genus_of_model(const CurveModel& model, Int group_order) {
    Signature sig = Signature::sphere(branch_indices_of_model(model));
    auto genus = genus_from_order(sig, group_order);
    if (!genus) throw consistency_error("model branch data gives no valid genus");
    return *genus;
}

Int fixed_point_count(const GeneratingVector& vec, const GroupElement& sigma) {
    const AbelianGroup& g = vec.group;
    g.check_element(sigma);
    if (sigma == g.identity()) throw domain_error("fixed points of the identity are the whole curve");
    Int order = g.order();
    Int count = 0;
    for (std::size_t i = 0; i < vec.elements.size(); ++i)
        if (g.in_cyclic_subgroup(vec.elements[i], sigma))
            count = checked_add(count, order / vec.target_orders[i]);
    return count;
}

bool is_hyperelliptic(const GeneratingVector& vec, Int genus) {
    if (genus < 2) throw domain_error("hyperellipticity question needs genus >= 2");
    if (genus == 2) return true;
    // A central involution outside G would double |G| past the abelian
    // bound 4g + 4; that argument needs |G| > 2g + 2, which holds for every
    // large group at genus >= 3.
    if (vec.group.order() <= 2 * genus + 2)
        throw consistency_error("group too small for the central-involution reduction");
    for (const auto& tau : vec.group.involutions())
        if (fixed_point_count(vec, tau) == 2 * genus + 2) return true;
    return false;
}

}  // namespace curvecat
