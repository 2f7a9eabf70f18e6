#pragma once

#include <vector>

#include "curvecat/abelian_group.hpp"
#include "curvecat/signature.hpp"

namespace curvecat {

// Existence certificate for an abelian cover of the sphere: elements of the
// prescribed orders that sum to zero and generate the group.
struct GeneratingVector {
    AbelianGroup group;
    std::vector<GroupElement> elements;
    std::vector<Int> target_orders;

    // Throws structural_error if any invariant fails.
    void validate(Int brute_bound = AbelianGroup::kDefaultBruteBound) const;

    bool operator==(const GeneratingVector&) const = default;
};

// Divisibility window for |G| over a sphere signature: lower = lcm of the
// indices (every stabilizer embeds), upper = gcd over j of the products
// omitting index j (any s-1 stabilizers generate). Admissible orders are
// the multiples of lower dividing upper.
struct OrderBounds {
    Int lower = 1;
    Int upper = 1;
};

OrderBounds order_bounds(const Signature& sig);
std::vector<Int> admissible_orders(const OrderBounds& bounds);

// Flat residue key of a vector's orbit under Aut(G) x permutations of equal-
// index positions; the minimum over the orbit, used for deduplication and
// deterministic ordering.
std::vector<Int> canonical_vector_key(const GeneratingVector& vec);

struct SearchOptions {
    Int brute_bound = AbelianGroup::kDefaultBruteBound;
};

// All generating vectors for (G, sig); with canonical_only, one lexicographic-
// minimum representative per orbit.
std::vector<GeneratingVector> find_generating_vectors(const AbelianGroup& group,
                                                      const Signature& sig,
                                                      bool canonical_only,
                                                      const SearchOptions& options = {});

// One classified action: group, signature, genus, plus a canonical vector
// witnessing existence.
struct ClassifiedCase {
    AbelianGroup group;
    Signature signature;
    Int genus = 0;
    GeneratingVector vector;
};

struct ClassifyOptions {
    int workers = 1;
    Int brute_bound = AbelianGroup::kDefaultBruteBound;
};

// Sweeps every large-signature candidate with realizable genus <= max_genus:
// admissible orders from the divisibility window, abelian groups of each
// order whose exponent every index divides, then exhaustive vector search.
// Sorted by (genus, order, signature, group).
std::vector<ClassifiedCase> classify_abelian(Int max_genus, const ClassifyOptions& options = {});

// Index bound that covers every candidate signature at genus <= max_genus:
// indices divide |G| <= 4*max_genus + 4.
Int sweep_index_bound(Int max_genus);

}  // namespace curvecat
