// Acceptance suite: one check per criterion, one PASS/FAIL line each,
// nonzero exit when anything fails. Expected values are frozen from the
// published classification; derived values were recomputed with the
// independent oracles in oracles.hpp before being pinned here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "curvecat/catalog.hpp"
#include "oracles.hpp"

using namespace curvecat;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string name)
        : number_(number), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (details_.size() < 6) details_.push_back(detail);
        }
    }

    ~Criterion() {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        std::printf("criterion %d (%s): %s (%.2fs)\n", number_, name_.c_str(),
                    ok_ ? "PASS" : "FAIL", elapsed.count());
        for (const auto& d : details_) std::printf("    %s\n", d.c_str());
        if (!ok_) ++failures;
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    int number_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::vector<std::string> details_;
};

std::string show(const std::vector<Int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// criterion 1: the large-signature table
// ---------------------------------------------------------------------------

LargeSignatureTable criterion_1() {
    Criterion crit(1, "signature enumeration");
    LargeSignatureTable table = enumerate_large_signatures();

    crit.expect(table.family_record_count() == 7,
                "expected 7 family records, got " + std::to_string(table.family_record_count()));
    std::set<std::vector<Int>> family_prefixes;
    for (const auto& fam : table.families) family_prefixes.insert(fam.fixed_indices);
    std::set<std::vector<Int>> expected_prefixes = {{2, 2, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}};
    crit.expect(family_prefixes == expected_prefixes, "one-parameter family prefixes differ");
    crit.expect(table.two_parameter.size() == 1 &&
                    table.two_parameter[0].fixed_indices == std::vector<Int>{2} &&
                    table.two_parameter[0].min_m == 3 &&
                    table.two_parameter[0].extra_lower_bounds ==
                        std::vector<std::pair<Int, Int>>{{3, 7}, {4, 5}},
                "two-parameter record differs");

    crit.expect(table.exceptional.size() == 102,
                "expected 102 exceptional, got " + std::to_string(table.exceptional.size()));
    std::map<std::vector<Int>, Int> blocks;
    for (const auto& sig : table.exceptional)
        ++blocks[std::vector<Int>(sig.indices.begin(), sig.indices.end() - 1)];
    const std::map<std::vector<Int>, Int> expected_blocks = {
        {{2, 2, 3}, 3}, {{3, 7}, 35}, {{3, 8}, 16}, {{3, 9}, 9}, {{3, 10}, 5}, {{3, 11}, 3},
        {{4, 5}, 15},   {{4, 6}, 6},  {{4, 7}, 3},  {{5, 5}, 5}, {{5, 6}, 2}};
    crit.expect(blocks == expected_blocks, "per-block exceptional counts differ");
    Int three_branch = 0;
    for (const auto& sig : table.exceptional)
        if (sig.branch_count() == 3) ++three_branch;
    crit.expect(three_branch == 99, "expected 99 three-branch exceptional cases");

    crit.expect(crit.seconds() < 5.0, "enumeration exceeded 5 s");
    return table;
}

// ---------------------------------------------------------------------------
// criterion 2: the abelian classification up to genus 40
// ---------------------------------------------------------------------------

using CaseKey = std::tuple<Int, std::vector<Int>, std::vector<Int>>;  // genus, factors, indices

std::set<CaseKey> expected_classification(Int max_genus) {
    std::set<CaseKey> expected;
    for (Int g = 2; g <= max_genus; ++g) {
        expected.insert({g, {4 * g + 2}, {2, 2 * g + 1, 4 * g + 2}});
        expected.insert({g, {4 * g}, {2, 4 * g, 4 * g}});
        expected.insert({g, {2, 2 * g + 2}, {2, 2 * g + 2, 2 * g + 2}});
    }
    expected.insert({2, {6}, {2, 2, 3, 3}});
    expected.insert({2, {6}, {3, 6, 6}});
    expected.insert({2, {5}, {5, 5, 5}});
    expected.insert({3, {12}, {3, 4, 12}});
    expected.insert({3, {9}, {3, 9, 9}});
    expected.insert({3, {4, 4}, {4, 4, 4}});
    expected.insert({4, {15}, {3, 5, 15}});
    expected.insert({4, {3, 6}, {3, 6, 6}});
    expected.insert({6, {21}, {3, 7, 21}});
    expected.insert({6, {5, 5}, {5, 5, 5}});
    expected.insert({7, {3, 9}, {3, 9, 9}});
    return expected;
}

std::vector<ClassifiedCase> criterion_2() {
    Criterion crit(2, "abelian classification to genus 40");
    std::vector<ClassifiedCase> cases = classify_abelian(40);
    std::set<CaseKey> got;
    for (const auto& c : cases)
        got.insert({c.genus, c.group.invariant_factors(), c.signature.indices});
    auto expected = expected_classification(40);
    crit.expect(got.size() == cases.size(), "duplicate classified cases");
    for (const auto& k : expected)
        crit.expect(got.count(k) == 1, "missing: genus " + std::to_string(std::get<0>(k)) + " " +
                                           show(std::get<1>(k)) + " " + show(std::get<2>(k)));
    for (const auto& k : got)
        crit.expect(expected.count(k) == 1, "extra: genus " + std::to_string(std::get<0>(k)) +
                                                " " + show(std::get<1>(k)) + " " +
                                                show(std::get<2>(k)));
    crit.expect(crit.seconds() < 60.0, "classification exceeded 60 s");
    return cases;
}

// ---------------------------------------------------------------------------
// criterion 3: quoted congruence solutions
// ---------------------------------------------------------------------------

void criterion_3() {
    Criterion crit(3, "congruence solutions");
    for (Int g = 2; g <= 40; ++g) {
        // cyclic of order 4g+2 over {2, 2g+1, 4g+2}: degL = 1, alpha = 2g-1
        auto sols = solve_cyclic(4 * g + 2, {2, 2 * g + 1, 4 * g + 2});
        const CyclicSolution* best = nullptr;
        for (const auto& s : sols)
            if (!best || std::tuple(s.degree, s.alphas) < std::tuple(best->degree, best->alphas))
                best = &s;
        crit.expect(best != nullptr, "no solution for the doubled family at g=" + std::to_string(g));
        if (best) {
            crit.expect(best->degree == 1 && best->alphas == std::vector<Int>{1, 1, 2 * g - 1},
                        "doubled-family solution differs at g=" + std::to_string(g));
        }

        // rank two Z_2 x Z_{2g+2} over {2, 2g+2, 2g+2}: degL1 = degL2 = 1,
        // alpha = g+1, beta = 2g+1
        AbelianGroup group({2, 2 * g + 2});
        Signature sig = Signature::sphere({2, 2 * g + 2, 2 * g + 2});
        GeneratingVector vec;
        vec.group = group;
        vec.elements = {GroupElement{{1, 0}}, GroupElement{{0, 1}},
                        GroupElement{{1, 2 * g + 1}}};
        vec.target_orders = sig.indices;
        vec.validate();
        auto rank2 = solve_rank2(group, sig, vec);
        crit.expect(rank2.size() == 1, "rank-2 solution count differs at g=" + std::to_string(g));
        if (rank2.size() == 1) {
            crit.expect(rank2[0].degrees == std::vector<Int>{1, 1},
                        "rank-2 degrees differ at g=" + std::to_string(g));
            crit.expect(rank2[0].exponent_matrix[2] == std::vector<Int>{g + 1, 2 * g + 1},
                        "rank-2 exponents differ at g=" + std::to_string(g));
        }
    }

    // four-branch case: degL = 2, beta = 2
    auto sols = solve_cyclic(6, {2, 2, 3, 3});
    const CyclicSolution* best = nullptr;
    for (const auto& s : sols)
        if (!best || std::tuple(s.degree, s.alphas) < std::tuple(best->degree, best->alphas))
            best = &s;
    crit.expect(best && best->degree == 2 && best->alphas == std::vector<Int>{1, 1, 1, 2},
                "four-branch solution differs");
}

// ---------------------------------------------------------------------------
// criterion 4: table of models
// ---------------------------------------------------------------------------

struct EquationShape {
    Int left = 0;
    std::vector<Int> exponents;  // sorted

    bool operator==(const EquationShape&) const = default;
};

std::vector<EquationShape> shape_of(const CurveModel& model) {
    std::vector<EquationShape> shapes;
    for (const auto& eq : model.equations) {
        EquationShape s;
        s.left = eq.left_exponent;
        s.exponents = eq.exponents;
        std::sort(s.exponents.begin(), s.exponents.end());
        shapes.push_back(std::move(s));
    }
    return shapes;
}

void criterion_4(const std::vector<ClassificationEntry>& entries) {
    Criterion crit(4, "model table reproduction");

    auto find = [&](const std::vector<Int>& factors, const std::vector<Int>& indices,
                    Int genus) -> const ClassificationEntry* {
        for (const auto& e : entries)
            if (e.group.invariant_factors() == factors && e.signature.indices == indices &&
                e.genus == genus)
                return &e;
        return nullptr;
    };

    struct FixedRow {
        std::vector<Int> factors;
        std::vector<Int> indices;
        Int genus;
        Ambient ambient;
        std::vector<EquationShape> shapes;
        const char* label;
    };
    const std::vector<FixedRow> fixed_rows = {
        {{12}, {3, 4, 12}, 3, Ambient::Plane, {{12, {3, 4, 5}}}, "row 3"},
        {{15}, {3, 5, 15}, 4, Ambient::Plane, {{15, {3, 5, 7}}}, "row 4"},
        {{6}, {3, 6, 6}, 2, Ambient::Plane, {{6, {1, 1, 4}}}, "row 5"},
        {{21}, {3, 7, 21}, 6, Ambient::Plane, {{21, {3, 7, 11}}}, "row 6"},
        {{9}, {3, 9, 9}, 3, Ambient::Plane, {{9, {1, 3, 5}}}, "row 7"},
        {{5}, {5, 5, 5}, 2, Ambient::Plane, {{5, {1, 1, 3}}}, "row 8"},
        {{3, 9}, {3, 9, 9}, 7, Ambient::Pair, {{3, {0, 1, 2}}, {9, {0, 1, 8}}}, "row 10"},
        {{3, 6}, {3, 6, 6}, 4, Ambient::Pair, {{3, {0, 1, 2}}, {6, {0, 1, 5}}}, "row 11"},
        {{5, 5}, {5, 5, 5}, 6, Ambient::Pair, {{5, {0, 1, 4}}, {5, {0, 1, 4}}}, "row 12"},
        {{4, 4}, {4, 4, 4}, 3, Ambient::Pair, {{4, {0, 1, 3}}, {4, {0, 1, 3}}}, "row 13"},
    };
    // genus column of the fixed rows: 3,4,2,6,3,2 then 7,4,6,3
    for (const auto& row : fixed_rows) {
        const auto* e = find(row.factors, row.indices, row.genus);
        crit.expect(e != nullptr, std::string(row.label) + " missing at its genus");
        if (!e) continue;
        crit.expect(e->model.ambient == row.ambient, std::string(row.label) + " ambient differs");
        crit.expect(shape_of(e->model) == row.shapes, std::string(row.label) + " exponents differ");
    }

    for (Int g = 2; g <= 40; ++g) {
        // row 1: y^(4g+2) = x^(2g+1) (x-z)^2 z^(2g-1)
        const auto* r1 = find({4 * g + 2}, {2, 2 * g + 1, 4 * g + 2}, g);
        crit.expect(r1 != nullptr, "row 1 missing at g=" + std::to_string(g));
        if (r1) {
            std::vector<Int> want = {2, 2 * g - 1, 2 * g + 1};
            crit.expect(r1->model.ambient == Ambient::Plane &&
                            shape_of(r1->model) == std::vector<EquationShape>{{4 * g + 2, want}},
                        "row 1 shape differs at g=" + std::to_string(g));
        }

        // row 2, corrected: y^(4g) = x^(2g) (x-z) z^(2g-1), flagged
        const auto* r2 = find({4 * g}, {2, 4 * g, 4 * g}, g);
        crit.expect(r2 != nullptr, "row 2 missing at g=" + std::to_string(g));
        if (r2) {
            std::vector<Int> want = {1, 2 * g - 1, 2 * g};
            crit.expect(r2->model.ambient == Ambient::Plane &&
                            shape_of(r2->model) == std::vector<EquationShape>{{4 * g, want}},
                        "row 2 corrected shape differs at g=" + std::to_string(g));
            crit.expect(std::find(r2->flags.begin(), r2->flags.end(),
                                  "second-family-printed-model") != r2->flags.end(),
                        "row 2 discrepancy flag missing at g=" + std::to_string(g));
        }

        // row 9: y^2 = xz, w^(2g+2) = (x-z) z^(2g+1)
        const auto* r9 = find({2, 2 * g + 2}, {2, 2 * g + 2, 2 * g + 2}, g);
        crit.expect(r9 != nullptr, "row 9 missing at g=" + std::to_string(g));
        if (r9) {
            std::vector<EquationShape> want = {{2, {0, 1, 1}}, {2 * g + 2, {0, 1, 2 * g + 1}}};
            crit.expect(r9->model.ambient == Ambient::Pair && shape_of(r9->model) == want,
                        "row 9 shape differs at g=" + std::to_string(g));
        }
    }

    // the weighted four-branch family
    const auto* fb = find({6}, {2, 2, 3, 3}, 2);
    crit.expect(fb != nullptr, "four-branch family missing");
    if (fb) {
        crit.expect(fb->model.ambient == Ambient::WeightedPlane && fb->model.y_weight == 2,
                    "four-branch ambient differs");
        crit.expect(shape_of(fb->model) == std::vector<EquationShape>{{6, {2, 3, 3, 4}}},
                    "four-branch exponents differ");
        crit.expect(fb->model.lambda_excluded == std::vector<Int>{0, 1},
                    "four-branch lambda domain differs");
    }

    // every emitted model passes round-trip and genus verification
    for (const auto& e : entries) {
        crit.expect(branch_indices_of_model(e.model) == e.signature.indices,
                    "round-trip failure: " + e.group.name());
        crit.expect(genus_of_model(e.model, e.group.order()) == e.genus,
                    "genus failure: " + e.group.name());
    }
}

// ---------------------------------------------------------------------------
// criterion 5: hyperellipticity
// ---------------------------------------------------------------------------

void criterion_5(const std::vector<ClassificationEntry>& entries) {
    Criterion crit(5, "hyperellipticity");
    // not hyperelliptic exactly on the eight exceptional rows of genus >= 3
    const std::set<std::pair<std::vector<Int>, std::vector<Int>>> non_hyper = {
        {{12}, {3, 4, 12}}, {{15}, {3, 5, 15}}, {{21}, {3, 7, 21}}, {{9}, {3, 9, 9}},
        {{3, 9}, {3, 9, 9}}, {{3, 6}, {3, 6, 6}}, {{5, 5}, {5, 5, 5}}, {{4, 4}, {4, 4, 4}}};
    for (const auto& e : entries) {
        bool expected = !non_hyper.count({e.group.invariant_factors(), e.signature.indices});
        crit.expect(e.hyperelliptic == expected,
                    "verdict differs for " + e.group.name() + " " + show(e.signature.indices));
        if (e.genus >= 8)
            crit.expect(e.hyperelliptic, "genus >= 8 entry not hyperelliptic: " + e.group.name());
    }
}

// ---------------------------------------------------------------------------
// criterion 6: property suites
// ---------------------------------------------------------------------------

void criterion_6(const std::vector<ClassificationEntry>& entries,
                 const LargeSignatureTable& table) {
    Criterion crit(6, "property suites");

    // (a) any s-1 stabilizers generate; (b) cyclic lcm; (d) ramification sum
    for (const auto& e : entries) {
        const std::size_t s = e.vector.elements.size();
        for (std::size_t j0 = 0; j0 < s; ++j0) {
            std::vector<GroupElement> rest;
            Int l = 1;
            for (std::size_t i = 0; i < s; ++i)
                if (i != j0) {
                    rest.push_back(e.vector.elements[i]);
                    l = lcm(l, e.vector.target_orders[i]);
                }
            crit.expect(e.group.subgroup_order(rest) == e.group.order(),
                        "(a) subset fails to generate: " + e.group.name());
            if (e.group.is_cyclic())
                crit.expect(l == e.group.order(), "(b) lcm rule fails: " + e.group.name());
        }

        Int total = 0;
        for (Int i = 1; i < e.group.order(); ++i)
            total += fixed_point_count(e.vector, e.group.element_at(i));
        Int expected = 0;
        for (Int ei : e.signature.indices) expected += (e.group.order() / ei) * (ei - 1);
        crit.expect(total == expected, "(d) ramification identity fails: " + e.group.name());
    }

    // (c) three-way existence agreement on every cyclic pair with |G| <= 100:
    // library vector search, congruence solver, and the independent residue
    // oracle.
    Int pairs = 0;
    for (const auto& sig : table.expand_all(100)) {
        Int l = 1;
        for (Int e : sig.indices) l = lcm(l, e);
        for (Int n = l; n <= 100; n += l) {
            bool search = !find_generating_vectors(AbelianGroup::cyclic(n), sig, false).empty();
            bool congruence = !solve_cyclic(n, sig.indices).empty();
            bool oracle = oracles::cyclic_vector_exists(n, sig.indices);
            crit.expect(search == congruence && congruence == oracle,
                        "(c) routes disagree at Z" + std::to_string(n) + " " + show(sig.indices));
            ++pairs;
        }
    }
    crit.expect(pairs > 200, "(c) sweep unexpectedly small");

    // (e) enumeration completeness against the brute-force oracle
    auto brute = oracles::all_large_signatures(200);
    std::set<std::vector<Int>> brute_set(brute.begin(), brute.end());
    std::set<std::vector<Int>> emitted_set;
    for (const auto& sig : table.expand_all(200)) emitted_set.insert(sig.indices);
    crit.expect(brute_set == emitted_set, "(e) enumeration differs from brute force");
}

// ---------------------------------------------------------------------------
// criterion 7: byte-identical runs
// ---------------------------------------------------------------------------

std::string run_cli_capture(const std::string& args, int& exit_code) {
    std::string cmd = std::string(CURVECAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string output;
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    char buffer[8192];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

void criterion_7() {
    Criterion crit(7, "deterministic output");
    int rc1 = 0;
    int rc2 = 0;
    std::string first = run_cli_capture("classify --max-genus 40", rc1);
    std::string second = run_cli_capture("classify --max-genus 40", rc2);
    crit.expect(rc1 == 0 && rc2 == 0, "classify run failed");
    crit.expect(!first.empty(), "classify produced no output");
    crit.expect(first == second, "two runs differ");
}

}  // namespace

int main() {
    LargeSignatureTable table = criterion_1();
    std::vector<ClassifiedCase> cases = criterion_2();
    criterion_3();

    std::vector<ClassificationEntry> entries;
    for (const auto& c : cases) entries.push_back(complete_case(c));
    criterion_4(entries);
    criterion_5(entries);
    criterion_6(entries, table);
    criterion_7();

    if (failures == 0) {
        std::printf("acceptance: all 7 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
