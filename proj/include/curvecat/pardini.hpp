#pragma once

#include <vector>

#include "curvecat/classifier.hpp"

namespace curvecat {

// One solution of the cyclic degree congruence: exponents alpha_i with
// 1 <= alpha_i < e_i, gcd(alpha_i, e_i) = 1, sum alpha_i * (n/e_i) = n * degree,
// and the induced monodromies generating Z_n (connected cover).
struct CyclicSolution {
    std::vector<Int> alphas;
    Int degree = 0;  // deg L

    bool operator==(const CyclicSolution&) const = default;
    auto operator<=>(const CyclicSolution&) const = default;
};

// All solutions for the cyclic group of order n over the given sorted
// ramification indices, ordered lexicographically by alpha tuple.
std::vector<CyclicSolution> solve_cyclic(Int n, const std::vector<Int>& indices);

// Canonical orbit representative under the character regauge
// alpha_i -> u * alpha_i mod e_i for units u mod n: the orbit member
// minimizing (degree, alpha tuple). Idempotent.
CyclicSolution normalize_solution(Int n, const std::vector<Int>& indices,
                                  const CyclicSolution& sol);

// Reduced building data over the sphere: a character basis chi_j of order
// d_j, the restriction exponents r[i][j] (0 <= r[i][j] < e_i), and the line
// bundle degrees deg L_j, subject to
//   sum_i d_j * r[i][j] / e_i = d_j * deg L_j      (degree congruence)
//   gcd(r[i][0..k), e_i) = 1                       (full stabilizer at Q_i).
struct ReducedBuildingData {
    AbelianGroup group;
    Signature signature;
    std::vector<Int> character_orders;             // d_j
    std::vector<std::vector<Int>> exponent_matrix; // s rows, k columns
    std::vector<Int> degrees;                      // deg L_j

    void validate() const;  // throws structural_error

    bool operator==(const ReducedBuildingData&) const = default;
};

// Building data of a cyclic solution: one character of order n, column of
// alphas, one degree.
ReducedBuildingData cyclic_building_data(const AbelianGroup& group, const Signature& sig,
                                         const CyclicSolution& sol);

// Rank-2 solver. When the first two stabilizers of the assignment split the
// group (orders multiply to |G| and the pair generates), the character basis
// is taken dual to that splitting, pinning the first two rows to (1,0) and
// (0,1); otherwise the canonical invariant-factor basis is used and all rows
// are free. Remaining rows are enumerated over the congruence constraints.
// Solutions are sorted by (degrees, matrix).
std::vector<ReducedBuildingData> solve_rank2(const AbelianGroup& group, const Signature& sig,
                                             const GeneratingVector& stabilizer_assignment);

// Local monodromy vector of the data: element i has j-th coordinate
// d_j * r[i][j] / e_i, relative to the character basis. Round-trips with
// find_generating_vectors up to canonicalization.
GeneratingVector vector_from_building_data(const ReducedBuildingData& data);

}  // namespace curvecat
