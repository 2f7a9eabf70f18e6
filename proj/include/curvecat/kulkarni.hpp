#pragma once

#include <string>
#include <vector>

#include "curvecat/signature.hpp"

namespace curvecat {

// Sphere signatures {f, m, n} unbounded in the last two indices: m >= min_m,
// n >= n_min(m), where n_min defaults to m and carries finitely many derived
// exceptions (stored in extra_lower_bounds).
struct TwoParamFamily {
    std::vector<Int> fixed_indices;                      // {2} in the derived table
    Int min_m = 0;
    std::vector<std::pair<Int, Int>> extra_lower_bounds; // (m, n_min) with n_min > m

    Int n_min(Int m) const;
    bool contains(const Signature& sig) const;
    std::vector<Signature> expand(Int max_index) const;
    std::string to_string() const;
};

// Output of the large-signature enumeration: quotient genus 0, three or four
// branch points, 0 < mu < 1/2, split into maximal one-parameter families,
// the distinguished two-parameter record(s), and a finite exceptional list.
struct LargeSignatureTable {
    std::vector<SignatureFamily> families;      // one-parameter, sorted by prefix
    std::vector<TwoParamFamily> two_parameter;  // exactly one arises
    std::vector<Signature> exceptional;         // sorted

    std::size_t family_record_count() const { return families.size() + two_parameter.size(); }

    // Every signature of the table with all indices <= max_index, deduplicated
    // and sorted.
    std::vector<Signature> expand_all(Int max_index) const;
};

// Derives the table from scratch by exact rational sweeps over sorted index
// tuples with monotone break conditions; nothing in the output is hard-coded.
LargeSignatureTable enumerate_large_signatures();

// One row of the exclusion certificate: over the stated regime, mu provably
// compares to the bound, so the regime admits no large group.
struct ExclusionCase {
    std::string regime;
    Signature witness;     // extremal configuration
    Rational witness_mu;   // exact mu at the witness
    Rational bound;
    std::string relation;  // ">=", "<=", "=="
    bool excluded;
};

// Certifies by exact inequality checks that a large action forces quotient
// genus 0 with 3 or 4 branch points: each other regime pins mu outside
// (0, 1/2).
std::vector<ExclusionCase> verify_exclusion_bounds();

}  // namespace curvecat
