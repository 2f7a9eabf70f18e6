#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecat/rational.hpp"

namespace curvecat {

// Branch signature of a Galois cover: quotient genus plus the multiset of
// ramification indices, kept sorted ascending.
struct Signature {
    Int quotient_genus = 0;
    std::vector<Int> indices;

    Signature() = default;
    Signature(Int genus_of_quotient, std::vector<Int> ramification_indices);

    static Signature sphere(std::vector<Int> ramification_indices) {
        return Signature(0, std::move(ramification_indices));
    }

    std::size_t branch_count() const { return indices.size(); }

    bool operator==(const Signature&) const = default;
    auto operator<=>(const Signature&) const = default;

    // "(0; 2,5,10)"; "(0; -)" for the unbranched signature.
    std::string to_string() const;
};

// mu = 2 g(Y) - 2 + sum(1 - 1/v_i), the factor multiplying |G| in
// Riemann-Hurwitz: 2 g(X) - 2 = |G| * mu.
Rational reduced_euler(const Signature& sig);

// Genus g with 2g - 2 = order * mu, if that is an integer >= 2.
std::optional<Int> genus_from_order(const Signature& sig, Int order);

// |G| > 4 (g - 1). Genus must be >= 2.
bool is_large(Int order, Int genus);

// One-parameter family of sphere signatures: the fixed indices plus one
// parametric index coeff*t + offset for t in [param_min, param_max].
struct SignatureFamily {
    Int quotient_genus = 0;
    std::vector<Int> fixed_indices;
    Int param_coeff = 1;
    Int param_offset = 0;
    Int param_min = 0;
    std::optional<Int> param_max;

    Int index_at(Int t) const { return checked_add(checked_mul(param_coeff, t), param_offset); }
    bool in_range(Int t) const {
        return t >= param_min && (!param_max || t <= *param_max);
    }
    Signature at(Int t) const;

    // "{2,2,2,n}, n >= 3"
    std::string to_string() const;
};

// All concrete signatures of the family with parameter <= max_param, sorted.
std::vector<Signature> expand_family(const SignatureFamily& fam, Int max_param);

}  // namespace curvecat
