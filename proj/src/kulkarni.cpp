#include "curvecat/kulkarni.hpp"

#include <algorithm>

#include "curvecat/errors.hpp"

namespace curvecat {

namespace {

const Rational kHalf(1, 2);

Rational mu_of(std::vector<Int> indices) {
    return reduced_euler(Signature::sphere(std::move(indices)));
}

// Limit of mu as the open indices grow: (s-2) - sum 1/v over the prefix.
// mu approaches this value strictly from below.
Rational mu_limit(std::size_t branch_count, const std::vector<Int>& prefix) {
    Rational lim(static_cast<Int>(branch_count) - 2);
    for (Int v : prefix) lim -= Rational(1, v);
    return lim;
}

// Smallest n >= floor_n with mu(prefix + n) > 0. Callers guarantee
// mu_limit(prefix) > 0, so the scan terminates.
Int first_positive(const std::vector<Int>& prefix, Int floor_n) {
    for (Int n = floor_n;; ++n) {
        std::vector<Int> idx = prefix;
        idx.push_back(n);
        if (mu_of(idx) > Rational(0)) return n;
    }
}

struct Derivation {
    std::vector<SignatureFamily> families;
    std::vector<TwoParamFamily> two_parameter;
    std::vector<Signature> exceptional;

    // Analyse the tail set {n >= last(prefix) : 0 < mu < 1/2} for a fixed
    // sorted prefix of length s-1. mu is strictly increasing in n with
    // supremum mu_limit, so the tail is a contiguous range, unbounded iff
    // the limit stays <= 1/2.
    void analyse_tail(const std::vector<Int>& prefix, std::size_t s) {
        Rational lim = mu_limit(s, prefix);
        if (lim <= Rational(0)) return;  // mu < lim <= 0 for every n
        Int n_lo = first_positive(prefix, prefix.back());
        if (lim <= kHalf) {
            SignatureFamily fam;
            fam.fixed_indices = prefix;
            fam.param_min = n_lo;
            families.push_back(std::move(fam));
            return;
        }
        for (Int n = n_lo;; ++n) {
            std::vector<Int> idx = prefix;
            idx.push_back(n);
            if (mu_of(idx) >= kHalf) break;
            exceptional.push_back(Signature::sphere(idx));
        }
    }

    // The (m, n) region above a fixed prefix of length s-2 is unbounded in
    // both directions exactly when lim_{m,n} mu <= 1/2; every column of the
    // region is then itself an unbounded family, so the whole region is
    // emitted as a single two-parameter record with derived lower bounds.
    bool try_two_parameter(const std::vector<Int>& prefix, std::size_t s) {
        Rational lim2 = mu_limit(s, prefix);
        if (!(lim2 > Rational(0) && lim2 <= kHalf)) return false;
        TwoParamFamily rec;
        rec.fixed_indices = prefix;
        Int m = prefix.empty() ? 2 : prefix.back();
        // Skip m whose column is empty (limit over n still nonpositive).
        auto column_limit = [&](Int mm) {
            std::vector<Int> col = prefix;
            col.push_back(mm);
            return mu_limit(s, col);
        };
        while (!(column_limit(m) > Rational(0))) ++m;
        rec.min_m = m;
        for (;; ++m) {
            std::vector<Int> col = prefix;
            col.push_back(m);
            Int n_lo = first_positive(col, m);
            if (n_lo > m) {
                rec.extra_lower_bounds.emplace_back(m, n_lo);
            } else {
                // mu(prefix, m, m) > 0 and mu is increasing in every index,
                // so all larger m have n_min = m; the bound list is complete.
                break;
            }
        }
        two_parameter.push_back(std::move(rec));
        return true;
    }
};

}  // namespace

LargeSignatureTable enumerate_large_signatures() {
    Derivation d;

    // Three branch points.
    for (Int v1 = 2;; ++v1) {
        if (mu_of({v1, v1, v1}) >= kHalf) break;
        if (d.try_two_parameter({v1}, 3)) continue;
        for (Int v2 = v1;; ++v2) {
            if (mu_of({v1, v2, v2}) >= kHalf) break;
            d.analyse_tail({v1, v2}, 3);
        }
    }

    // Four branch points.
    for (Int v1 = 2;; ++v1) {
        if (mu_of({v1, v1, v1, v1}) >= kHalf) break;
        for (Int v2 = v1;; ++v2) {
            if (mu_of({v1, v2, v2, v2}) >= kHalf) break;
            if (d.try_two_parameter({v1, v2}, 4)) continue;
            for (Int v3 = v2;; ++v3) {
                if (mu_of({v1, v2, v3, v3}) >= kHalf) break;
                d.analyse_tail({v1, v2, v3}, 4);
            }
        }
    }

    LargeSignatureTable table;
    table.families = std::move(d.families);
    table.two_parameter = std::move(d.two_parameter);
    table.exceptional = std::move(d.exceptional);
    std::sort(table.families.begin(), table.families.end(),
              [](const SignatureFamily& a, const SignatureFamily& b) {
                  return a.fixed_indices < b.fixed_indices;
              });
    std::sort(table.exceptional.begin(), table.exceptional.end());
    return table;
}

Int TwoParamFamily::n_min(Int m) const {
    for (auto [mm, nn] : extra_lower_bounds)
        if (mm == m) return nn;
    return m;
}

bool TwoParamFamily::contains(const Signature& sig) const {
    if (sig.quotient_genus != 0) return false;
    if (sig.indices.size() != fixed_indices.size() + 2) return false;
    for (std::size_t i = 0; i < fixed_indices.size(); ++i)
        if (sig.indices[i] != fixed_indices[i]) return false;
    Int m = sig.indices[fixed_indices.size()];
    Int n = sig.indices[fixed_indices.size() + 1];
    return m >= min_m && n >= n_min(m);
}

std::vector<Signature> TwoParamFamily::expand(Int max_index) const {
    std::vector<Signature> out;
    for (Int m = min_m; m <= max_index; ++m)
        for (Int n = n_min(m); n <= max_index; ++n) {
            std::vector<Int> idx = fixed_indices;
            idx.push_back(m);
            idx.push_back(n);
            out.push_back(Signature::sphere(std::move(idx)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string TwoParamFamily::to_string() const {
    std::string s = "{";
    for (Int v : fixed_indices) s += std::to_string(v) + ",";
    s += "m,n}, " + std::to_string(min_m) + " <= m <= n";
    for (auto [m, n] : extra_lower_bounds)
        s += "; if m=" + std::to_string(m) + " then n >= " + std::to_string(n);
    return s;
}

std::vector<Signature> LargeSignatureTable::expand_all(Int max_index) const {
    std::vector<Signature> out;
    for (const auto& fam : families) {
        // param_coeff = 1, offset = 0 in the derived table, so the parameter
        // bound is the index bound.
        auto sigs = expand_family(fam, max_index);
        out.insert(out.end(), sigs.begin(), sigs.end());
    }
    for (const auto& rec : two_parameter) {
        auto sigs = rec.expand(max_index);
        out.insert(out.end(), sigs.begin(), sigs.end());
    }
    for (const auto& sig : exceptional)
        if (sig.indices.back() <= max_index) out.push_back(sig);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ExclusionCase> verify_exclusion_bounds() {
    std::vector<ExclusionCase> cases;
    const Rational zero(0);

    // Each term 1 - 1/v lies in [1/2, 1), so over a regime with minimal
    // quotient genus h and minimal branch count s, mu >= 2h - 2 + s/2, with
    // equality at all-2 indices. The checks below evaluate that infimum
    // exactly and compare against the relevant threshold.
    auto inf_case = [&](std::string regime, Int h, Int s) {
        Signature witness(h, std::vector<Int>(static_cast<std::size_t>(s), 2));
        Rational mu = reduced_euler(witness);
        Rational inf = Rational(2 * h - 2) + Rational(s, 2);
        if (mu != inf) throw consistency_error("exclusion infimum mismatch");
        cases.push_back({std::move(regime), std::move(witness), mu, kHalf, ">=", mu >= kHalf});
    };
    inf_case("quotient genus >= 1, s >= 1", 1, 1);
    inf_case("quotient genus >= 2", 2, 0);
    inf_case("quotient genus 0, s >= 5", 0, 5);

    // Quotient genus 0 with s <= 2: every term is < 1, so mu < s - 2 <= 0.
    {
        Signature witness = Signature::sphere({2, 2});
        Rational mu = reduced_euler(witness);
        Rational sup(2 - 2);  // s - 2 at s = 2
        bool excluded = sup <= zero && mu < sup;
        cases.push_back({"quotient genus 0, s <= 2", std::move(witness), mu, zero, "<=", excluded});
    }

    // Quotient genus 1 unbranched: mu = 0 exactly, so the cover has genus 1,
    // below the genus >= 2 scope.
    {
        Signature witness(1, {});
        Rational mu = reduced_euler(witness);
        cases.push_back({"quotient genus 1, s = 0", std::move(witness), mu, zero, "==", mu == zero});
    }
    return cases;
}

}  // namespace curvecat
