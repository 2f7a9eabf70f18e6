#include "curvecat/pardini.hpp"

#include <algorithm>

#include "curvecat/errors.hpp"

namespace curvecat {

std::vector<CyclicSolution> solve_cyclic(Int n, const std::vector<Int>& indices) {
    if (indices.size() < 3) throw domain_error("cyclic solver needs at least 3 branch points");
    if (n < 1) throw domain_error("cyclic solver needs n >= 1");
    for (Int e : indices)
        if (e < 1 || n % e != 0) throw domain_error("every index must divide the group order");

    const std::size_t s = indices.size();
    std::vector<std::vector<Int>> units(s);
    for (std::size_t i = 0; i < s; ++i)
        for (Int a = 1; a < indices[i]; ++a)
            if (gcd(a, indices[i]) == 1) units[i].push_back(a);

    std::vector<CyclicSolution> out;
    std::vector<Int> alphas(s);
    auto recurse = [&](auto&& self, std::size_t i, Int total, Int span_gcd) -> void {
        if (i == s) {
            // Zero sum mod n, and the monodromies alpha_i * (n/e_i) must
            // generate Z_n, i.e. the cover is connected.
            if (total % n != 0) return;
            if (span_gcd != 1) return;
            out.push_back(CyclicSolution{alphas, total / n});
            return;
        }
        Int step = n / indices[i];
        for (Int a : units[i]) {
            alphas[i] = a;
            self(self, i + 1, checked_add(total, checked_mul(a, step)),
                 gcd(span_gcd, gcd(checked_mul(a, step), n)));
        }
    };
    recurse(recurse, 0, 0, n == 1 ? 1 : n);
    std::sort(out.begin(), out.end(), [](const CyclicSolution& a, const CyclicSolution& b) {
        return a.alphas < b.alphas;
    });
    return out;
}

CyclicSolution normalize_solution(Int n, const std::vector<Int>& indices,
                                  const CyclicSolution& sol) {
    if (sol.alphas.size() != indices.size())
        throw structural_error("solution arity does not match indices");
    CyclicSolution best;
    bool have = false;
    for (Int u = 1; u < n || (n == 1 && u == 1); ++u) {
        if (n > 1 && gcd(u, n) != 1) continue;
        CyclicSolution cand;
        cand.alphas.resize(indices.size());
        Int total = 0;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            cand.alphas[i] = mod(checked_mul(u, sol.alphas[i]), indices[i]);
            total = checked_add(total, checked_mul(cand.alphas[i], n / indices[i]));
        }
        if (total % n != 0) throw consistency_error("regauged solution broke the congruence");
        cand.degree = total / n;
        if (!have || std::tuple(cand.degree, cand.alphas) < std::tuple(best.degree, best.alphas)) {
            best = std::move(cand);
            have = true;
        }
        if (n == 1) break;
    }
    return best;
}

void ReducedBuildingData::validate() const {
    const std::size_t s = signature.indices.size();
    const std::size_t k = character_orders.size();
    if (exponent_matrix.size() != s || degrees.size() != k)
        throw structural_error("building data shape mismatch");
    for (std::size_t i = 0; i < s; ++i) {
        if (exponent_matrix[i].size() != k) throw structural_error("building data row shape mismatch");
        Int e = signature.indices[i];
        Int row_gcd = e;
        for (std::size_t j = 0; j < k; ++j) {
            Int r = exponent_matrix[i][j];
            if (r < 0 || r >= e) throw structural_error("exponent out of range");
            if (checked_mul(character_orders[j], r) % e != 0)
                throw structural_error("character restriction has wrong order");
            row_gcd = gcd(row_gcd, r);
        }
        if (row_gcd != 1) throw structural_error("stabilizer row is not full");
    }
    for (std::size_t j = 0; j < k; ++j) {
        Rational total(0);
        for (std::size_t i = 0; i < s; ++i)
            total += Rational(exponent_matrix[i][j], signature.indices[i]);
        if (total != Rational(degrees[j]))
            throw structural_error("degree congruence violated");
        if (degrees[j] < 1) throw structural_error("nonpositive bundle degree");
    }
}

ReducedBuildingData cyclic_building_data(const AbelianGroup& group, const Signature& sig,
                                         const CyclicSolution& sol) {
    if (!group.is_cyclic()) throw domain_error("cyclic building data needs a cyclic group");
    ReducedBuildingData data;
    data.group = group;
    data.signature = sig;
    data.character_orders = {group.order()};
    for (Int a : sol.alphas) data.exponent_matrix.push_back({a});
    data.degrees = {sol.degree};
    data.validate();
    return data;
}

namespace {

// Coordinates of the monodromy element at branch i relative to the
// character basis: a_j = d_j * r[i][j] / e_i mod d_j.
GroupElement monodromy_of_row(const std::vector<Int>& row, Int e,
                              const std::vector<Int>& character_orders) {
    GroupElement m;
    for (std::size_t j = 0; j < character_orders.size(); ++j) {
        Int prod = checked_mul(character_orders[j], row[j]);
        if (prod % e != 0) throw structural_error("row is not a character of the stabilizer");
        m.residues.push_back(mod(prod / e, character_orders[j]));
    }
    return m;
}

}  // namespace

std::vector<ReducedBuildingData> solve_rank2(const AbelianGroup& group, const Signature& sig,
                                             const GeneratingVector& stabilizer_assignment) {
    if (group.rank() != 2) throw domain_error("rank-2 solver needs exactly two invariant factors");
    if (stabilizer_assignment.group != group)
        throw structural_error("stabilizer assignment group mismatch");
    stabilizer_assignment.validate();
    const auto& e = sig.indices;
    const std::size_t s = e.size();
    if (s < 3) throw domain_error("rank-2 solver needs at least 3 branch points");

    // Character basis selection. The first two stabilizers split the group
    // exactly when their orders multiply to |G| and the pair generates; the
    // dual basis then pins rows 0 and 1. This is the situation in every
    // classified case; otherwise fall back to the invariant-factor basis
    // with all rows free.
    std::vector<Int> d;
    std::size_t pinned = 0;
    Int pair_product = checked_mul(e[0], e[1]);
    bool splits = pair_product == group.order() && e[1] % e[0] == 0 &&
                  group.subgroup_order({stabilizer_assignment.elements[0],
                                        stabilizer_assignment.elements[1]}) == group.order();
    if (splits) {
        d = {e[0], e[1]};
        pinned = 2;
    } else {
        d = group.invariant_factors();
        pinned = 0;
    }

    // The abstract group presented by the basis (d is a divisibility chain
    // on both paths above).
    AbelianGroup basis_group{std::vector<Int>(d)};

    std::vector<std::vector<Int>> matrix(s, std::vector<Int>(2, 0));
    if (pinned == 2) {
        matrix[0] = {1, 0};
        matrix[1] = {0, 1};
    }

    // Candidate rows per free branch point: integrality e_i | d_j * r and a
    // full-order row gcd.
    auto row_candidates = [&](Int ei) {
        std::vector<std::vector<Int>> rows;
        for (Int r1 = 0; r1 < ei; ++r1) {
            if (checked_mul(d[0], r1) % ei != 0) continue;
            for (Int r2 = 0; r2 < ei; ++r2) {
                if (checked_mul(d[1], r2) % ei != 0) continue;
                if (gcd(gcd(r1, r2), ei) != 1) continue;
                rows.push_back({r1, r2});
            }
        }
        return rows;
    };
    std::vector<std::vector<std::vector<Int>>> candidates;
    for (std::size_t i = pinned; i < s; ++i) candidates.push_back(row_candidates(e[i]));

    std::vector<ReducedBuildingData> out;
    auto emit_if_valid = [&] {
        // Degree congruence per column.
        std::vector<Int> degrees(2);
        for (std::size_t j = 0; j < 2; ++j) {
            Rational total(0);
            for (std::size_t i = 0; i < s; ++i) total += Rational(matrix[i][j], e[i]);
            if (!total.is_integer()) return;
            degrees[j] = total.numerator();
            if (degrees[j] < 1) return;
        }
        // Monodromies must have exact orders and generate (connected cover).
        std::vector<GroupElement> monodromies;
        for (std::size_t i = 0; i < s; ++i) {
            GroupElement m = monodromy_of_row(matrix[i], e[i], d);
            if (basis_group.element_order(m) != e[i]) return;
            monodromies.push_back(std::move(m));
        }
        if (basis_group.subgroup_order(monodromies) != basis_group.order()) return;

        ReducedBuildingData data;
        data.group = group;
        data.signature = sig;
        data.character_orders = d;
        data.exponent_matrix = matrix;
        data.degrees = std::move(degrees);
        data.validate();
        out.push_back(std::move(data));
    };

    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == s) {
            emit_if_valid();
            return;
        }
        for (const auto& row : candidates[i - pinned]) {
            matrix[i] = row;
            self(self, i + 1);
        }
    };
    recurse(recurse, pinned);

    std::sort(out.begin(), out.end(), [](const ReducedBuildingData& a, const ReducedBuildingData& b) {
        return std::tuple(a.degrees, a.exponent_matrix) < std::tuple(b.degrees, b.exponent_matrix);
    });
    return out;
}

GeneratingVector vector_from_building_data(const ReducedBuildingData& data) {
    data.validate();
    AbelianGroup presented(std::vector<Int>(data.character_orders));
    GeneratingVector vec;
    vec.group = presented;
    vec.target_orders = data.signature.indices;
    for (std::size_t i = 0; i < data.exponent_matrix.size(); ++i)
        vec.elements.push_back(
            monodromy_of_row(data.exponent_matrix[i], data.signature.indices[i], data.character_orders));
    vec.validate();
    return vec;
}

}  // namespace curvecat
