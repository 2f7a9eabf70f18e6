#pragma once

#include <string>
#include <vector>

#include "curvecat/pardini.hpp"

namespace curvecat {

enum class Ambient {
    Plane,          // P^2, y of weight 1
    WeightedPlane,  // P(w,1,1), y of weight w >= 2
    Pair,           // two equations in P^3 coordinates (x, y, z, w)
};

std::string ambient_name(Ambient a);

// Branch point of the quotient map in (x, z) coordinates. The parametric
// fourth point is (lambda, 1).
struct BranchCoordinate {
    Int x = 0;
    Int z = 1;
    bool is_lambda = false;

    // Linear factor vanishing at the point: "x", "(x-z)", "z", "(x-lambda*z)".
    std::string factor() const;

    bool operator==(const BranchCoordinate&) const = default;
};

// Fixed coordinates for up to four branch points: (0,1), (1,1), (1,0),
// (lambda,1). Assignment of branch index to point follows building-data
// order; Moebius freedom makes the choice immaterial but fixing it keeps
// output deterministic.
std::vector<BranchCoordinate> branch_coordinates(std::size_t count);

// y^left_exponent = prod factor_i^exponents[i], with exponents aligned to
// the model's branch points (zero = factor absent). Weighted-homogeneous:
// left_exponent * weight = sum of exponents.
struct ModelEquation {
    std::string lhs = "y";
    Int left_exponent = 0;
    Int weight = 1;
    std::vector<Int> exponents;

    bool operator==(const ModelEquation&) const = default;
};

struct CurveModel {
    Ambient ambient = Ambient::Plane;
    Int y_weight = 1;
    std::vector<BranchCoordinate> points;
    std::vector<ModelEquation> equations;  // 1 or 2
    bool has_lambda = false;
    std::vector<Int> lambda_excluded;      // {0, 1} when has_lambda

    bool operator==(const CurveModel&) const = default;
};

// "y^10 = x^5*(x-z)^2*z^3"; exponent-1 factors unmarked, zero factors omitted.
std::string render_equation(const CurveModel& model, const ModelEquation& eq);

// Explicit model of the cover described by reduced building data: a single
// superelliptic equation for one character, a pair for two. Verifies itself
// on emission (branch indices and genus recomputed from the equations must
// match the building data); a failure throws consistency_error.
CurveModel emit_model(const ReducedBuildingData& data);

// Ramification indices of the projection (x, z), recovered from exponents
// alone: at point i the index is lcm_j of d_j / gcd(c_ij, d_j) with d_j the
// left exponent of equation j. Sorted ascending.
std::vector<Int> branch_indices_of_model(const CurveModel& model);

// Genus from the recovered indices via 2g - 2 = order * mu. Throws
// consistency_error if that is not an integer >= 2.
Int genus_of_model(const CurveModel& model, Int group_order);

// Number of fixed points of sigma != id on the cover: points above branch
// point i number |G|/e_i and are fixed exactly when sigma lies in the
// stabilizer generated by the i-th monodromy.
Int fixed_point_count(const GeneratingVector& vec, const GroupElement& sigma);

// Genus 2 is always hyperelliptic; for genus >= 3 a hyperelliptic involution
// is central, and |G| > 2g + 2 (checked) forces it into G, so the decision
// reduces to scanning involutions of G for one with 2g + 2 fixed points.
bool is_hyperelliptic(const GeneratingVector& vec, Int genus);

}  // namespace curvecat
