#include "curvecat/classifier.hpp"

#include <algorithm>
#include <thread>

#include "curvecat/errors.hpp"
#include "curvecat/kulkarni.hpp"

namespace curvecat {

void GeneratingVector::validate(Int brute_bound) const {
    if (elements.size() != target_orders.size())
        throw structural_error("generating vector arity mismatch");
    GroupElement sum = group.identity();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        group.check_element(elements[i]);
        if (group.element_order(elements[i]) != target_orders[i])
            throw structural_error("generating vector element order mismatch");
        sum = group.add(sum, elements[i]);
    }
    if (sum != group.identity()) throw structural_error("generating vector does not sum to zero");
    if (group.subgroup_order(elements, brute_bound) != group.order())
        throw structural_error("generating vector does not generate the group");
}

OrderBounds order_bounds(const Signature& sig) {
    if (sig.quotient_genus != 0) throw domain_error("order bounds need quotient genus 0");
    if (sig.branch_count() < 3) throw domain_error("order bounds need at least 3 branch points");
    OrderBounds b;
    b.lower = 1;
    for (Int e : sig.indices) b.lower = lcm(b.lower, e);
    b.upper = 0;
    for (std::size_t j = 0; j < sig.indices.size(); ++j) {
        Int prod = 1;
        for (std::size_t i = 0; i < sig.indices.size(); ++i)
            if (i != j) prod = checked_mul(prod, sig.indices[i]);
        b.upper = gcd(b.upper, prod);
    }
    return b;
}

std::vector<Int> admissible_orders(const OrderBounds& bounds) {
    std::vector<Int> out;
    if (bounds.lower <= 0 || bounds.upper % bounds.lower != 0) return out;
    for (Int d = 1; d * d <= bounds.upper; ++d) {
        if (bounds.upper % d) continue;
        if (d % bounds.lower == 0) out.push_back(d);
        Int q = bounds.upper / d;
        if (q != d && q % bounds.lower == 0) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Int> flatten(const std::vector<GroupElement>& elements) {
    std::vector<Int> flat;
    for (const auto& e : elements) flat.insert(flat.end(), e.residues.begin(), e.residues.end());
    return flat;
}

// Permutations of positions within blocks of equal target order. The orders
// are sorted, so blocks are contiguous.
std::vector<std::vector<std::size_t>> block_permutations(const std::vector<Int>& orders) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> base(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) base[i] = i;
    std::vector<std::size_t> perm = base;
    // Enumerate by permuting each equal-order block independently.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= orders.size(); ++i) {
        if (i == orders.size() || orders[i] != orders[begin]) {
            blocks.emplace_back(begin, i);
            begin = i;
        }
    }
    auto recurse = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            perms.push_back(perm);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            self(self, b + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
        std::sort(perm.begin() + lo, perm.begin() + hi);
    };
    recurse(recurse, 0);
    return perms;
}

std::vector<Int> canonical_key_with(const GeneratingVector& vec,
                                    const std::vector<Automorphism>& autos,
                                    const std::vector<std::vector<std::size_t>>& perms) {
    const AbelianGroup& g = vec.group;
    std::vector<Int> best;
    std::vector<GroupElement> permuted(vec.elements.size());
    for (const auto& perm : perms) {
        for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = vec.elements[perm[i]];
        for (const auto& phi : autos) {
            std::vector<GroupElement> mapped(permuted.size());
            for (std::size_t i = 0; i < permuted.size(); ++i) mapped[i] = g.apply(phi, permuted[i]);
            std::vector<Int> flat = flatten(mapped);
            if (best.empty() || flat < best) best = std::move(flat);
        }
    }
    return best;
}

}  // namespace

std::vector<Int> canonical_vector_key(const GeneratingVector& vec) {
    return canonical_key_with(vec, vec.group.automorphisms(),
                              block_permutations(vec.target_orders));
}

namespace {

GeneratingVector vector_from_key(const AbelianGroup& g, const std::vector<Int>& orders,
                                 const std::vector<Int>& key) {
    GeneratingVector vec;
    vec.group = g;
    vec.target_orders = orders;
    std::size_t k = static_cast<std::size_t>(g.rank());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        GroupElement e;
        e.residues.assign(key.begin() + static_cast<long>(i * k),
                          key.begin() + static_cast<long>((i + 1) * k));
        vec.elements.push_back(std::move(e));
    }
    return vec;
}

}  // namespace

std::vector<GeneratingVector> find_generating_vectors(const AbelianGroup& group,
                                                      const Signature& sig,
                                                      bool canonical_only,
                                                      const SearchOptions& options) {
    if (sig.quotient_genus != 0 || sig.branch_count() < 3)
        throw domain_error("vector search needs quotient genus 0 and s >= 3");
    if (group.order() > options.brute_bound)
        throw capacity_error("group order exceeds brute-force bound");

    const auto& orders = sig.indices;
    const std::size_t s = orders.size();
    std::vector<GeneratingVector> found;

    // Exponent pre-filter: a cyclic stabilizer of order e embeds only if
    // e divides the exponent.
    for (Int e : orders)
        if (group.exponent() % e != 0) return found;

    std::vector<std::vector<GroupElement>> pools;
    for (std::size_t i = 0; i + 1 < s; ++i) pools.push_back(group.elements_of_order(orders[i]));

    std::vector<GroupElement> chosen(s);
    GroupElement zero = group.identity();
    auto recurse = [&](auto&& self, std::size_t i, const GroupElement& partial_sum) -> void {
        if (i + 1 == s) {
            GroupElement last = group.negate(partial_sum);
            if (group.element_order(last) != orders[s - 1]) return;
            chosen[s - 1] = std::move(last);
            if (group.subgroup_order(chosen, options.brute_bound) != group.order()) return;
            found.push_back(GeneratingVector{group, chosen, orders});
            return;
        }
        for (const auto& x : pools[i]) {
            chosen[i] = x;
            self(self, i + 1, group.add(partial_sum, x));
        }
    };
    recurse(recurse, 0, zero);

    if (!canonical_only) return found;

    auto autos = group.automorphisms();
    auto perms = block_permutations(orders);
    std::vector<std::vector<Int>> keys;
    for (const auto& v : found) keys.push_back(canonical_key_with(v, autos, perms));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<GeneratingVector> reps;
    for (const auto& key : keys) reps.push_back(vector_from_key(group, orders, key));
    return reps;
}

Int sweep_index_bound(Int max_genus) { return 4 * max_genus + 4; }

namespace {

std::vector<ClassifiedCase> classify_signature(const Signature& sig, Int max_genus,
                                               const ClassifyOptions& options) {
    std::vector<ClassifiedCase> out;
    OrderBounds bounds = order_bounds(sig);
    for (Int n : admissible_orders(bounds)) {
        auto genus = genus_from_order(sig, n);
        if (!genus || *genus > max_genus) continue;
        if (!is_large(n, *genus)) continue;  // cannot happen for mu < 1/2; kept as a guard
        for (const auto& group : enumerate_abelian_groups(n)) {
            bool exponent_ok = true;
            for (Int e : sig.indices)
                if (group.exponent() % e != 0) {
                    exponent_ok = false;
                    break;
                }
            if (!exponent_ok) continue;
            auto vecs =
                find_generating_vectors(group, sig, /*canonical_only=*/true, {options.brute_bound});
            if (vecs.empty()) continue;
            out.push_back(ClassifiedCase{group, sig, *genus, vecs.front()});
        }
    }
    return out;
}

}  // namespace

std::vector<ClassifiedCase> classify_abelian(Int max_genus, const ClassifyOptions& options) {
    if (max_genus < 2) throw domain_error("classification needs max_genus >= 2");
    Int bound = sweep_index_bound(max_genus);
    // The two-parameter region dominates the sweep at ~bound^2/2 candidate
    // signatures; refuse requests that would not fit in memory.
    if (checked_mul(bound, bound) / 2 > 50'000'000)
        throw capacity_error("sweep to genus " + std::to_string(max_genus) +
                             " expands past the candidate budget");
    LargeSignatureTable table = enumerate_large_signatures();
    std::vector<Signature> sigs = table.expand_all(bound);

    std::vector<ClassifiedCase> cases;
    int workers = std::max(1, options.workers);
    if (workers == 1) {
        for (const auto& sig : sigs) {
            auto part = classify_signature(sig, max_genus, options);
            cases.insert(cases.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::vector<ClassifiedCase>> buckets(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < sigs.size();
                     i += static_cast<std::size_t>(workers)) {
                    auto part = classify_signature(sigs[i], max_genus, options);
                    auto& bucket = buckets[static_cast<std::size_t>(w)];
                    bucket.insert(bucket.end(), part.begin(), part.end());
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& bucket : buckets) cases.insert(cases.end(), bucket.begin(), bucket.end());
    }

    std::sort(cases.begin(), cases.end(), [](const ClassifiedCase& a, const ClassifiedCase& b) {
        auto ka = std::tuple(a.genus, a.group.order(), a.signature, a.group.invariant_factors());
        auto kb = std::tuple(b.genus, b.group.order(), b.signature, b.group.invariant_factors());
        return ka < kb;
    });
    return cases;
}

}  // namespace curvecat
