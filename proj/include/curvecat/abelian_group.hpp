#pragma once

#include <compare>
#include <string>
#include <vector>

#include "curvecat/ints.hpp"

namespace curvecat {

// Element of a finite abelian group in invariant-factor coordinates:
// residues[i] lies in [0, d_i) where d_i is the i-th invariant factor.
struct GroupElement {
    std::vector<Int> residues;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

struct Automorphism {
    // Image of the i-th canonical generator.
    std::vector<GroupElement> generator_images;
};

// Finite abelian group in canonical invariant-factor form:
// Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k and every d_i >= 2.
// The trivial group is the empty factor list. Group equality is
// structural equality of the factor list.
class AbelianGroup {
public:
    static constexpr Int kDefaultBruteBound = 1 << 20;

    AbelianGroup() = default;  // trivial group
    explicit AbelianGroup(std::vector<Int> invariant_factors);

    static AbelianGroup trivial() { return AbelianGroup(); }
    static AbelianGroup cyclic(Int n);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;
    Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    int rank() const { return static_cast<int>(factors_.size()); }
    bool is_trivial() const { return factors_.empty(); }
    bool is_cyclic() const { return factors_.size() <= 1; }

    bool operator==(const AbelianGroup&) const = default;
    auto operator<=>(const AbelianGroup&) const = default;

    // Throws structural_error on wrong arity or out-of-range residue.
    void check_element(const GroupElement& x) const;

    GroupElement identity() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(Int k, const GroupElement& a) const;

    // Least m >= 1 with m*x = 0: lcm over coordinates of d_i / gcd(r_i, d_i).
    Int element_order(const GroupElement& x) const;

    // Mixed-radix encoding, a bijection [0, order) <-> elements.
    Int element_index(const GroupElement& x) const;
    GroupElement element_at(Int index) const;

    std::vector<GroupElement> elements() const;
    std::vector<GroupElement> elements_of_order(Int m) const;

    // All elements of order exactly 2. Count is 2^r - 1 with r the number
    // of even invariant factors.
    std::vector<GroupElement> involutions() const;

    // Order of the subgroup generated by gens, by closure under addition.
    // <empty> has order 1. Throws capacity_error if order() exceeds the bound.
    Int subgroup_order(const std::vector<GroupElement>& gens,
                       Int brute_bound = kDefaultBruteBound) const;

    // Membership test x in <g> by walking the cyclic subgroup.
    bool in_cyclic_subgroup(const GroupElement& g, const GroupElement& x) const;

    // Full automorphism group by brute force over generator images.
    std::vector<Automorphism> automorphisms() const;
    GroupElement apply(const Automorphism& phi, const GroupElement& x) const;

    // "Z10", "Z2xZ6", "Z1" for the trivial group.
    std::string name() const;

private:
    std::vector<Int> factors_;
};

// Parses "Z2xZ6", "2x6", "Z4 x Z4" into a group; throws structural_error
// if the factor list is not in canonical invariant-factor form.
AbelianGroup parse_group(const std::string& text);

// Every abelian group of the given order exactly once, in canonical
// invariant-factor form, sorted lexicographically by factor list.
std::vector<AbelianGroup> enumerate_abelian_groups(Int order);

// Order of <xs> in G; free-function spelling of AbelianGroup::subgroup_order.
Int subgroup_generated(const AbelianGroup& g, const std::vector<GroupElement>& xs,
                       Int brute_bound = AbelianGroup::kDefaultBruteBound);

}  // namespace curvecat
