#include "curvecat/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "curvecat/errors.hpp"

namespace curvecat {

AbelianGroup::AbelianGroup(std::vector<Int> invariant_factors) : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw structural_error("invariant factor < 2");
        if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
            throw structural_error("invariant factors must form a divisibility chain");
    }
}

AbelianGroup AbelianGroup::cyclic(Int n) {
    if (n < 1) throw structural_error("cyclic group needs order >= 1");
    if (n == 1) return trivial();
    return AbelianGroup({n});
}

Int AbelianGroup::order() const {
    Int n = 1;
    for (Int d : factors_) n = checked_mul(n, d);
    return n;
}

void AbelianGroup::check_element(const GroupElement& x) const {
    if (x.residues.size() != factors_.size())
        throw structural_error("element arity does not match group rank");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (x.residues[i] < 0 || x.residues[i] >= factors_[i])
            throw structural_error("element residue out of range");
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<Int>(factors_.size(), 0)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = (r.residues[i] + b.residues[i]) % factors_[i];
    return r;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = a.residues[i] == 0 ? 0 : factors_[i] - a.residues[i];
    return r;
}

GroupElement AbelianGroup::scale(Int k, const GroupElement& a) const {
    GroupElement r = identity();
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = mod(checked_mul(mod(k, factors_[i]), a.residues[i]), factors_[i]);
    return r;
}

Int AbelianGroup::element_order(const GroupElement& x) const {
    check_element(x);
    Int m = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        m = lcm(m, factors_[i] / gcd(x.residues[i], factors_[i]));
    return m;
}

Int AbelianGroup::element_index(const GroupElement& x) const {
    Int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x.residues[i];
    return idx;
}

GroupElement AbelianGroup::element_at(Int index) const {
    GroupElement x = identity();
    for (std::size_t i = factors_.size(); i-- > 0;) {
        x.residues[i] = index % factors_[i];
        index /= factors_[i];
    }
    return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    Int n = order();
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<GroupElement> AbelianGroup::elements_of_order(Int m) const {
    std::vector<GroupElement> out;
    if (m < 1 || exponent() % m != 0) return out;
    for (Int i = 0, n = order(); i < n; ++i) {
        GroupElement x = element_at(i);
        if (element_order(x) == m) out.push_back(std::move(x));
    }
    return out;
}

std::vector<GroupElement> AbelianGroup::involutions() const { return elements_of_order(2); }

Int AbelianGroup::subgroup_order(const std::vector<GroupElement>& gens, Int brute_bound) const {
    if (order() > brute_bound) throw capacity_error("group order exceeds brute-force bound");
    for (const auto& g : gens) check_element(g);
    std::vector<char> seen(static_cast<std::size_t>(order()), 0);
    std::vector<GroupElement> frontier{identity()};
    seen[0] = 1;
    Int count = 1;
    while (!frontier.empty()) {
        GroupElement x = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            GroupElement y = add(x, g);
            Int idx = element_index(y);
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = 1;
                ++count;
                frontier.push_back(std::move(y));
            }
        }
    }
    return count;
}

bool AbelianGroup::in_cyclic_subgroup(const GroupElement& g, const GroupElement& x) const {
    check_element(g);
    check_element(x);
    GroupElement cur = identity();
    Int ord = element_order(g);
    for (Int k = 0; k < ord; ++k) {
        if (cur == x) return true;
        cur = add(cur, g);
    }
    return false;
}

std::vector<Automorphism> AbelianGroup::automorphisms() const {
    std::vector<Automorphism> out;
    if (is_trivial()) {
        out.push_back(Automorphism{{}});
        return out;
    }
    // An automorphism sends the i-th canonical generator to an element of
    // order exactly d_i; a tuple of such images defines an endomorphism,
    // which is an automorphism iff the images generate the whole group.
    std::vector<std::vector<GroupElement>> candidates;
    for (Int d : factors_) candidates.push_back(elements_of_order(d));
    std::vector<GroupElement> images(factors_.size());
    Int n = order();
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == factors_.size()) {
            if (subgroup_order(images) == n) out.push_back(Automorphism{images});
            return;
        }
        for (const auto& c : candidates[i]) {
            images[i] = c;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

GroupElement AbelianGroup::apply(const Automorphism& phi, const GroupElement& x) const {
    check_element(x);
    GroupElement r = identity();
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r = add(r, scale(x.residues[i], phi.generator_images[i]));
    return r;
}

std::string AbelianGroup::name() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(factors_[i]);
    }
    return s;
}

AbelianGroup parse_group(const std::string& text) {
    std::vector<Int> factors;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            factors.push_back(std::stoll(cur));
        } catch (const std::exception&) {
            throw structural_error("cannot parse group factor '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur += c;
        } else if (c == 'x' || c == 'X' || c == '*') {
            flush();
        } else if (c == 'Z' || c == 'z' || c == '_' || c == ' ') {
            // separators around factors
        } else {
            throw structural_error("unexpected character in group name: " + text);
        }
    }
    flush();
    if (factors.empty()) throw structural_error("empty group description: " + text);
    if (factors == std::vector<Int>{1}) return AbelianGroup::trivial();
    return AbelianGroup(factors);
}

namespace {

// (prime, multiplicity) factorization by trial division.
std::vector<std::pair<Int, Int>> factorize(Int n) {
    std::vector<std::pair<Int, Int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        Int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// All partitions of n as weakly decreasing part lists.
std::vector<std::vector<Int>> partitions(Int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto recurse = [&](auto&& self, Int rest, Int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (Int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

Int ipow(Int base, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

std::vector<AbelianGroup> enumerate_abelian_groups(Int order) {
    if (order < 1) throw domain_error("group order must be >= 1");
    if (order == 1) return {AbelianGroup::trivial()};
    auto primes = factorize(order);
    std::vector<std::vector<std::vector<Int>>> per_prime;
    per_prime.reserve(primes.size());
    for (auto [p, e] : primes) per_prime.push_back(partitions(e));

    std::vector<AbelianGroup> out;
    std::vector<std::size_t> pick(primes.size(), 0);
    for (;;) {
        // Combine: invariant factor k-i accumulates the i-th largest part
        // of every prime's partition, so divisibility d_1 | ... | d_k holds.
        std::size_t rank = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            rank = std::max(rank, per_prime[i][pick[i]].size());
        std::vector<Int> factors(rank, 1);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const auto& parts = per_prime[i][pick[i]];
            for (std::size_t j = 0; j < parts.size(); ++j) {
                std::size_t slot = rank - 1 - j;  // largest part -> last factor
                factors[slot] = checked_mul(factors[slot], ipow(primes[i].first, parts[j]));
            }
        }
        out.push_back(AbelianGroup(std::move(factors)));

        std::size_t i = 0;
        for (; i < primes.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == primes.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const AbelianGroup& a, const AbelianGroup& b) { return a.invariant_factors() < b.invariant_factors(); });
    return out;
}

Int subgroup_generated(const AbelianGroup& g, const std::vector<GroupElement>& xs, Int brute_bound) {
    return g.subgroup_order(xs, brute_bound);
}

}  // namespace curvecat
