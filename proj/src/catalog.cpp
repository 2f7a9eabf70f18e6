#include "curvecat/catalog.hpp"

#include <algorithm>
#include <set>

#include "curvecat/errors.hpp"

namespace curvecat {

const std::vector<Flag>& known_flags() {
    // Versioned annotation list, v1. The catalog documents differences from
    // the published classification instead of silently correcting or
    // silently copying it.
    static const std::vector<Flag> flags = {
        {"second-family-printed-model",
         "published model y^(4g) = x^(2g)*(x-z)^2*z^(2g-1) for the second infinite family has "
         "right-hand degree 4g+1, so it is not homogeneous, and its exponents recover branch "
         "indices {2,2g,4g}; the catalog emits the verified congruence solution "
         "y^(4g) = x^(2g)*(x-z)*z^(2g-1)"},
        {"second-family-involution-note",
         "the published hyperellipticity argument counts the second infinite family among the "
         "cases whose involutions miss 2g+2 fixed points, while its statement keeps the family "
         "hyperelliptic; direct counting finds an involution with exactly 2g+2 fixed points and "
         "the computed verdict is reported"},
        {"first-family-point-labels",
         "the published discussion attaches indices 2, 2g+1, 4g+2 to the points (1,0), (1,1), "
         "(0,1) in that order, but the printed exponents place index 2 at (0,1) and 4g+2 at "
         "(1,0); the catalog reports indices per point as computed from the exponents"},
        {"four-branch-lambda-domain",
         "the published four-branch family excludes lambda = -1 alongside 0 and 1, yet the "
         "construction only needs the branch points distinct, i.e. lambda outside {0,1}; the "
         "catalog excludes exactly {0,1} and carries this note"},
    };
    return flags;
}

TableRow table_row_of(const ClassifiedCase& c) {
    const Int g = c.genus;
    const auto& idx = c.signature.indices;
    if (idx.size() == 4) return TableRow::FourBranch;
    if (c.group.is_cyclic() && c.group.order() == 4 * g + 2 &&
        idx == std::vector<Int>{2, 2 * g + 1, 4 * g + 2})
        return TableRow::CyclicTwice;
    if (c.group.is_cyclic() && c.group.order() == 4 * g &&
        idx == std::vector<Int>{2, 4 * g, 4 * g})
        return TableRow::CyclicFour;
    if (c.group.rank() == 2 && c.group.order() == 4 * g + 4 &&
        idx == std::vector<Int>{2, 2 * g + 2, 2 * g + 2})
        return TableRow::RankTwo;
    return TableRow::Exceptional;
}

namespace {

std::vector<std::string> flags_for(const ClassifiedCase& c) {
    switch (table_row_of(c)) {
        case TableRow::CyclicTwice: return {"first-family-point-labels"};
        case TableRow::CyclicFour:
            return {"second-family-printed-model", "second-family-involution-note"};
        case TableRow::FourBranch: return {"four-branch-lambda-domain"};
        default: return {};
    }
}

}  // namespace

ClassificationEntry complete_case(const ClassifiedCase& c) {
    ClassificationEntry entry;
    entry.group = c.group;
    entry.signature = c.signature;
    entry.genus = c.genus;
    entry.vector = c.vector;

    if (c.group.is_cyclic()) {
        auto sols = solve_cyclic(c.group.order(), c.signature.indices);
        if (sols.empty())
            throw consistency_error("classified cyclic case has no congruence solution: " +
                                    c.group.name() + " " + c.signature.to_string());
        const CyclicSolution* best = &sols.front();
        for (const auto& sol : sols)
            if (std::tuple(sol.degree, sol.alphas) < std::tuple(best->degree, best->alphas))
                best = &sol;
        entry.building_data = cyclic_building_data(c.group, c.signature, *best);
    } else if (c.group.rank() == 2) {
        auto sols = solve_rank2(c.group, c.signature, c.vector);
        if (sols.empty())
            throw consistency_error("classified rank-2 case has no building data: " +
                                    c.group.name() + " " + c.signature.to_string());
        entry.building_data = sols.front();
    } else {
        throw state_error("classified case of rank > 2; no construction template");
    }

    entry.model = emit_model(entry.building_data);
    if (genus_of_model(entry.model, c.group.order()) != c.genus)
        throw consistency_error("model genus disagrees with classified genus");
    entry.hyperelliptic = is_hyperelliptic(c.vector, c.genus);
    entry.flags = flags_for(c);
    return entry;
}

ClassificationCatalog build_classification(Int max_genus, const ClassifyOptions& options) {
    ClassificationCatalog catalog;
    catalog.max_genus = max_genus;
    for (const auto& c : classify_abelian(max_genus, options))
        catalog.entries.push_back(complete_case(c));
    return catalog;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "table") return Format::Table;
    if (name == "latex") return Format::Latex;
    throw domain_error("unknown format: " + name);
}

nlohmann::ordered_json command_echo(const std::string& name,
                                    const nlohmann::ordered_json& parameters) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["parameters"] = parameters;
    return j;
}

namespace {

std::string brace_list(const std::vector<Int>& values) {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + "}";
}

nlohmann::ordered_json signature_json(const Signature& sig) {
    nlohmann::ordered_json j;
    j["quotient_genus"] = sig.quotient_genus;
    j["indices"] = sig.indices;
    return j;
}

nlohmann::ordered_json entry_json(const ClassificationEntry& e) {
    nlohmann::ordered_json j;
    j["group"]["invariant_factors"] = e.group.invariant_factors();
    j["group"]["name"] = e.group.name();
    j["group"]["order"] = e.group.order();
    j["signature"] = signature_json(e.signature);
    j["genus"] = e.genus;
    {
        nlohmann::ordered_json vec = nlohmann::ordered_json::array();
        for (const auto& el : e.vector.elements) vec.push_back(el.residues);
        j["generating_vector"] = std::move(vec);
    }
    j["building_data"]["character_orders"] = e.building_data.character_orders;
    j["building_data"]["exponent_matrix"] = e.building_data.exponent_matrix;
    j["building_data"]["degrees"] = e.building_data.degrees;
    j["model"]["ambient"] = ambient_name(e.model.ambient);
    j["model"]["y_weight"] = e.model.y_weight;
    {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& p : e.model.points) {
            nlohmann::ordered_json pt = nlohmann::ordered_json::array();
            if (p.is_lambda)
                pt.push_back("lambda");
            else
                pt.push_back(p.x);
            pt.push_back(p.z);
            pts.push_back(std::move(pt));
        }
        j["model"]["branch_points"] = std::move(pts);
    }
    {
        nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
        for (const auto& eq : e.model.equations) {
            nlohmann::ordered_json je;
            je["lhs"] = eq.lhs;
            je["left_exponent"] = eq.left_exponent;
            je["weight"] = eq.weight;
            je["exponents"] = eq.exponents;
            je["rendered"] = render_equation(e.model, eq);
            eqs.push_back(std::move(je));
        }
        j["model"]["equations"] = std::move(eqs);
    }
    if (e.model.has_lambda) j["model"]["lambda_excluded"] = e.model.lambda_excluded;
    j["hyperelliptic"] = e.hyperelliptic;
    j["flags"] = e.flags;
    return j;
}

nlohmann::ordered_json referenced_flags_json(const std::vector<ClassificationEntry>& entries) {
    std::set<std::string> used;
    for (const auto& e : entries) used.insert(e.flags.begin(), e.flags.end());
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : known_flags()) {
        if (!used.count(f.id)) continue;
        nlohmann::ordered_json jf;
        jf["id"] = f.id;
        jf["message"] = f.message;
        arr.push_back(std::move(jf));
    }
    return arr;
}

std::string model_text(const ClassificationEntry& e) {
    std::string s;
    for (std::size_t i = 0; i < e.model.equations.size(); ++i) {
        if (i) s += ", ";
        s += render_equation(e.model, e.model.equations[i]);
    }
    switch (e.model.ambient) {
        case Ambient::Plane: break;
        case Ambient::WeightedPlane:
            s += "  [P(" + std::to_string(e.model.y_weight) + ",1,1)]";
            break;
        case Ambient::Pair: s += "  [P3]"; break;
    }
    if (e.model.has_lambda) s += "  lambda not in {0,1}";
    return s;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i) s += ",";
        s += flags[i];
    }
    return s.empty() ? "-" : s;
}

std::string table_of(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += pad(row[i], i + 1 < row.size() ? widths[i] + 2 : row[i].size());
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string latex_group(const AbelianGroup& g) {
    if (g.is_trivial()) return "$0$";
    std::string s = "$";
    const auto& f = g.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += "\\times";
        s += "\\mathbb{Z}_{" + std::to_string(f[i]) + "}";
    }
    return s + "$";
}

std::string latex_equation(const CurveModel& model, const ModelEquation& eq) {
    std::string s = eq.lhs + "^{" + std::to_string(eq.left_exponent) + "}=";
    bool any = false;
    for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
        Int c = eq.exponents[i];
        if (c == 0) continue;
        any = true;
        const auto& p = model.points[i];
        std::string base = p.is_lambda ? "(x-\\lambda z)" : (p.x == 0 ? "x" : (p.z == 0 ? "z" : "(x-z)"));
        s += base;
        if (c != 1) s += "^{" + std::to_string(c) + "}";
    }
    if (!any) s += "1";
    return "$" + s + "$";
}

}  // namespace

nlohmann::ordered_json classification_json(const ClassificationCatalog& catalog,
                                           const nlohmann::ordered_json& command) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    doc["counts"]["entries"] = catalog.entries.size();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : catalog.entries) entries.push_back(entry_json(e));
    doc["entries"] = std::move(entries);
    doc["flags"] = referenced_flags_json(catalog.entries);
    return doc;
}

std::string render_classification(const ClassificationCatalog& catalog, Format format,
                                  const nlohmann::ordered_json& command) {
    if (format == Format::Json) return classification_json(catalog, command).dump(2) + "\n";

    if (format == Format::Table) {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"genus", "group", "signature", "model", "hyperelliptic", "flags"});
        for (const auto& e : catalog.entries)
            rows.push_back({std::to_string(e.genus), e.group.name(), brace_list(e.signature.indices),
                            model_text(e), e.hyperelliptic ? "yes" : "no", join_flags(e.flags)});
        std::string out = "classification up to genus " + std::to_string(catalog.max_genus) +
                          " (" + std::to_string(catalog.entries.size()) + " entries)\n";
        out += table_of(rows);
        for (const auto& f : known_flags()) {
            bool used = false;
            for (const auto& e : catalog.entries)
                used = used ||
                       std::find(e.flags.begin(), e.flags.end(), f.id) != e.flags.end();
            if (used) out += "FLAG " + f.id + ": " + f.message + "\n";
        }
        return out;
    }

    // Publication-style table.
    std::string out;
    out += "% classification of large abelian actions, genus 2.." +
           std::to_string(catalog.max_genus) + "\n";
    out += "\\begin{tabular}{clllc}\n";
    out += "$g$ & $G$ & indices & model & hyperelliptic\\\\\n\\hline\n";
    for (const auto& e : catalog.entries) {
        std::string eqs;
        for (std::size_t i = 0; i < e.model.equations.size(); ++i) {
            if (i) eqs += ", ";
            eqs += latex_equation(e.model, e.model.equations[i]);
        }
        std::string indices;
        for (std::size_t i = 0; i < e.signature.indices.size(); ++i) {
            if (i) indices += ",";
            indices += std::to_string(e.signature.indices[i]);
        }
        out += std::to_string(e.genus) + " & " + latex_group(e.group) + " & $" + indices + "$ & " +
               eqs + " & " + (e.hyperelliptic ? "yes" : "no") + "\\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

nlohmann::ordered_json kulkarni_json(const KulkarniCatalog& catalog,
                                     const nlohmann::ordered_json& command) {
    const auto& table = catalog.table;
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    doc["counts"]["family_records"] = table.family_record_count();
    doc["counts"]["exceptional"] = table.exceptional.size();

    nlohmann::ordered_json fams = nlohmann::ordered_json::array();
    for (const auto& fam : table.families) {
        nlohmann::ordered_json jf;
        jf["fixed_indices"] = fam.fixed_indices;
        jf["parametric_index"]["coeff"] = fam.param_coeff;
        jf["parametric_index"]["offset"] = fam.param_offset;
        jf["param_min"] = fam.param_min;
        if (fam.param_max) jf["param_max"] = *fam.param_max;
        jf["description"] = fam.to_string();
        fams.push_back(std::move(jf));
    }
    doc["families"] = std::move(fams);

    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : table.two_parameter) {
        nlohmann::ordered_json jr;
        jr["fixed_indices"] = rec.fixed_indices;
        jr["min_m"] = rec.min_m;
        nlohmann::ordered_json lbs = nlohmann::ordered_json::array();
        for (auto [m, n] : rec.extra_lower_bounds) lbs.push_back({m, n});
        jr["lower_bounds"] = std::move(lbs);
        jr["description"] = rec.to_string();
        recs.push_back(std::move(jr));
    }
    doc["two_parameter"] = std::move(recs);

    nlohmann::ordered_json exc = nlohmann::ordered_json::array();
    for (const auto& sig : table.exceptional) exc.push_back(signature_json(sig));
    doc["exceptional"] = std::move(exc);

    if (catalog.max_param > 0) {
        nlohmann::ordered_json expanded = nlohmann::ordered_json::array();
        for (const auto& sig : table.expand_all(catalog.max_param)) expanded.push_back(sig.indices);
        doc["expanded"] = std::move(expanded);
    }

    nlohmann::ordered_json cert = nlohmann::ordered_json::array();
    for (const auto& c : verify_exclusion_bounds()) {
        nlohmann::ordered_json jc;
        jc["regime"] = c.regime;
        jc["witness"] = signature_json(c.witness);
        jc["witness_mu"] = c.witness_mu.to_string();
        jc["bound"] = c.bound.to_string();
        jc["relation"] = c.relation;
        jc["excluded"] = c.excluded;
        cert.push_back(std::move(jc));
    }
    doc["exclusion_certificate"] = std::move(cert);
    doc["flags"] = nlohmann::ordered_json::array();  // annotations live on classification entries
    return doc;
}

namespace {

// Exceptional signatures grouped by their first s-1 indices; each block is a
// contiguous range in the last index by construction.
struct ExceptionalBlock {
    std::vector<Int> prefix;
    Int lo = 0;
    Int hi = 0;
    Int count = 0;
};

std::vector<ExceptionalBlock> exceptional_blocks(const std::vector<Signature>& exceptional) {
    std::vector<ExceptionalBlock> blocks;
    for (const auto& sig : exceptional) {
        std::vector<Int> prefix(sig.indices.begin(), sig.indices.end() - 1);
        Int last = sig.indices.back();
        if (!blocks.empty() && blocks.back().prefix == prefix && blocks.back().hi + 1 == last) {
            blocks.back().hi = last;
            ++blocks.back().count;
        } else {
            blocks.push_back({std::move(prefix), last, last, 1});
        }
    }
    return blocks;
}

}  // namespace

std::string render_kulkarni(const KulkarniCatalog& catalog, Format format,
                            const nlohmann::ordered_json& command) {
    if (format == Format::Json) return kulkarni_json(catalog, command).dump(2) + "\n";

    const auto& table = catalog.table;
    auto blocks = exceptional_blocks(table.exceptional);

    if (format == Format::Table) {
        std::string out = "large-signature table: " + std::to_string(table.family_record_count()) +
                          " family records, " + std::to_string(table.exceptional.size()) +
                          " exceptional signatures\n";
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"kind", "signatures"});
        for (const auto& rec : table.two_parameter) rows.push_back({"two-parameter family", rec.to_string()});
        for (const auto& fam : table.families) rows.push_back({"family", fam.to_string()});
        for (const auto& b : blocks) {
            std::string desc = "{";
            for (Int v : b.prefix) desc += std::to_string(v) + ",";
            desc += "a}, " + std::to_string(b.lo) + " <= a <= " + std::to_string(b.hi) + "  (" +
                    std::to_string(b.count) + ")";
            rows.push_back({"exceptional", desc});
        }
        out += table_of(rows);
        if (catalog.max_param > 0) {
            auto expanded = table.expand_all(catalog.max_param);
            out += "expanded to index <= " + std::to_string(catalog.max_param) + ": " +
                   std::to_string(expanded.size()) + " signatures\n";
            for (const auto& sig : expanded) out += "  " + brace_list(sig.indices) + "\n";
        }
        out += "exclusion certificate (regimes with no admissible signature):\n";
        for (const auto& c : verify_exclusion_bounds())
            out += "  " + c.regime + ": mu " + c.relation + " " + c.bound.to_string() +
                   "  [witness " + c.witness.to_string() + ", mu = " + c.witness_mu.to_string() +
                   "] -> " + (c.excluded ? "excluded" : "NOT EXCLUDED") + "\n";
        return out;
    }

    // Publication-style tabbing table, grouped by branch count.
    std::string out = "% sphere signatures admitting a large automorphism group\n";
    out += "\\begin{tabbing}\n";
    auto emit_for = [&](std::size_t s, const char* heading) {
        out += "\\hspace{6mm}\\=\\hspace{52mm}\\=\\kill\n";
        out += std::string(heading) + "\\\\[1mm]\n";
        for (const auto& rec : table.two_parameter) {
            if (rec.fixed_indices.size() + 2 != s) continue;
            std::string sig = "\\{";
            for (Int v : rec.fixed_indices) sig += std::to_string(v) + ",";
            sig += "m,n\\}";
            out += "\\> two-parameter family \\> $" + sig + "$, $" + std::to_string(rec.min_m) +
                   "\\leq m\\leq n$";
            for (auto [m, n] : rec.extra_lower_bounds)
                out += "; $m=" + std::to_string(m) + "\\Rightarrow n\\geq " + std::to_string(n) + "$";
            out += "\\\\\n";
        }
        for (const auto& fam : table.families) {
            if (fam.fixed_indices.size() + 1 != s) continue;
            std::string sig = "\\{";
            for (Int v : fam.fixed_indices) sig += std::to_string(v) + ",";
            sig += "n\\}";
            out += "\\> infinite family \\> $" + sig + "$, $n\\geq " +
                   std::to_string(fam.param_min) + "$\\\\\n";
        }
        for (const auto& b : blocks) {
            if (b.prefix.size() + 1 != s) continue;
            std::string sig = "\\{";
            for (Int v : b.prefix) sig += std::to_string(v) + ",";
            sig += "a\\}";
            out += "\\> exceptional \\> $" + sig + "$, $" + std::to_string(b.lo) + "\\leq a\\leq " +
                   std::to_string(b.hi) + "$\\\\\n";
        }
    };
    emit_for(4, "Four branch points");
    emit_for(3, "Three branch points");
    out += "\\end{tabbing}\n";
    return out;
}

std::string render_hyperelliptic(const ClassificationCatalog& catalog) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"genus", "group", "signature", "hyperelliptic", "witness"});
    for (const auto& e : catalog.entries) {
        std::string witness = "-";
        if (e.genus == 2) {
            witness = "genus 2";
        } else if (e.hyperelliptic) {
            for (const auto& tau : e.group.involutions()) {
                if (fixed_point_count(e.vector, tau) == 2 * e.genus + 2) {
                    witness = "tau=" + brace_list(tau.residues) + " with " +
                              std::to_string(2 * e.genus + 2) + " fixed points";
                    break;
                }
            }
        }
        rows.push_back({std::to_string(e.genus), e.group.name(), brace_list(e.signature.indices),
                        e.hyperelliptic ? "yes" : "no", witness});
    }
    return "hyperellipticity up to genus " + std::to_string(catalog.max_genus) + "\n" +
           table_of(rows);
}

bool VerifyReport::ok() const {
    for (const auto& c : checks)
        if (c.fail != 0) return false;
    return true;
}

namespace {

VerifyCheck& check_named(VerifyReport& report, const std::string& name) {
    for (auto& c : report.checks)
        if (c.name == name) return c;
    report.checks.push_back(VerifyCheck{name, 0, 0, {}});
    return report.checks.back();
}

void record(VerifyReport& report, const std::string& name, bool ok, const std::string& detail) {
    VerifyCheck& c = check_named(report, name);
    if (ok) {
        ++c.pass;
    } else {
        ++c.fail;
        if (c.failures.size() < 8) c.failures.push_back(detail);
    }
}

}  // namespace

VerifyReport verify_classification(const ClassificationCatalog& catalog) {
    VerifyReport report;
    report.max_genus = catalog.max_genus;

    for (const auto& e : catalog.entries) {
        const std::string where = e.group.name() + " " + e.signature.to_string();
        const Int order = e.group.order();
        const std::size_t s = e.signature.indices.size();

        bool vector_ok = true;
        try {
            e.vector.validate();
        } catch (const std::exception& ex) {
            vector_ok = false;
        }
        record(report, "vector-validity", vector_ok, where);
        record(report, "largeness", is_large(order, e.genus), where);

        // Any s-1 stabilizers generate the whole group.
        bool nakajima = true;
        for (std::size_t j0 = 0; j0 < s; ++j0) {
            std::vector<GroupElement> rest;
            for (std::size_t i = 0; i < s; ++i)
                if (i != j0) rest.push_back(e.vector.elements[i]);
            if (e.group.subgroup_order(rest) != order) nakajima = false;
        }
        record(report, "nakajima-subsets", nakajima, where);

        if (e.group.is_cyclic()) {
            bool lcm_ok = true;
            for (std::size_t j0 = 0; j0 < s; ++j0) {
                Int l = 1;
                for (std::size_t i = 0; i < s; ++i)
                    if (i != j0) l = lcm(l, e.signature.indices[i]);
                if (l != order) lcm_ok = false;
            }
            record(report, "cyclic-lcm", lcm_ok, where);
        }

        bool data_ok = true;
        try {
            e.building_data.validate();
        } catch (const std::exception& ex) {
            data_ok = false;
        }
        record(report, "building-data-validity", data_ok, where);

        bool degrees_ok = true;
        for (Int d : e.building_data.degrees) degrees_ok = degrees_ok && d >= 1;
        record(report, "degree-positivity", degrees_ok, where);

        bool roundtrip_ok = false;
        try {
            GeneratingVector rebuilt = vector_from_building_data(e.building_data);
            roundtrip_ok = rebuilt.group == e.group &&
                           canonical_vector_key(rebuilt) == canonical_vector_key(e.vector);
        } catch (const std::exception& ex) {
            roundtrip_ok = false;
        }
        record(report, "vector-roundtrip", roundtrip_ok, where);

        record(report, "model-roundtrip",
               branch_indices_of_model(e.model) == e.signature.indices, where);
        bool genus_ok = false;
        try {
            genus_ok = genus_of_model(e.model, order) == e.genus;
        } catch (const std::exception& ex) {
            genus_ok = false;
        }
        record(report, "model-genus", genus_ok, where);

        bool homogeneous = true;
        for (const auto& eq : e.model.equations) {
            Int total = 0;
            for (Int c : eq.exponents) total += c;
            homogeneous = homogeneous && total == eq.left_exponent * eq.weight;
        }
        record(report, "model-homogeneity", homogeneous, where);

        // sum over sigma != id of fixed points equals sum (|G|/e_i)(e_i - 1):
        // each point above Q_i is fixed by exactly e_i - 1 nontrivial elements.
        Int total_fixed = 0;
        for (Int idx = 1; idx < order; ++idx)
            total_fixed += fixed_point_count(e.vector, e.group.element_at(idx));
        Int expected = 0;
        for (Int ei : e.signature.indices) expected += (order / ei) * (ei - 1);
        record(report, "fixed-point-identity", total_fixed == expected, where);

        record(report, "hyperelliptic-genus-bound", e.genus < 8 || e.hyperelliptic, where);
    }

    // Cyclic cross-route: congruence solvability and vector existence agree
    // on every cyclic candidate of the sweep with order <= 100.
    {
        LargeSignatureTable table = enumerate_large_signatures();
        for (const auto& sig : table.expand_all(sweep_index_bound(catalog.max_genus))) {
            for (Int n : admissible_orders(order_bounds(sig))) {
                if (n > 100) continue;
                bool congruence = !solve_cyclic(n, sig.indices).empty();
                bool vectors =
                    !find_generating_vectors(AbelianGroup::cyclic(n), sig, false).empty();
                record(report, "cross-route-cyclic", congruence == vectors,
                       "Z" + std::to_string(n) + " " + sig.to_string());
            }
        }
    }

    std::set<std::string> used;
    for (const auto& e : catalog.entries) used.insert(e.flags.begin(), e.flags.end());
    for (const auto& f : known_flags())
        if (used.count(f.id)) report.flagged.push_back(f);
    return report;
}

std::string render_verify(const VerifyReport& report) {
    std::string out = "verification report (max genus " + std::to_string(report.max_genus) + ")\n";
    for (const auto& c : report.checks) {
        out += "check " + c.name + ": " + std::to_string(c.pass) + " pass, " +
               std::to_string(c.fail) + " fail\n";
        for (const auto& f : c.failures) out += "  FAIL " + f + "\n";
    }
    for (const auto& f : report.flagged) out += "FLAG " + f.id + ": " + f.message + "\n";
    out += std::string("result: ") + (report.ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace curvecat
