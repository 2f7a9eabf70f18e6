#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curvecat/catalog.hpp"
#include "curvecat/errors.hpp"

namespace {

using namespace curvecat;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCapacity = 4;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct CommonFlags {
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format: json, table, latex")
        ->check(CLI::IsMember({"json", "table", "latex"}));
    cmd->add_option("-o,--output", flags.output, "write the document to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog of compact Riemann surfaces with a large abelian automorphism group"};
    app.require_subcommand(1);

    // kulkarni: enumerate admissible branch signatures.
    auto* kulkarni_cmd = app.add_subcommand(
        "kulkarni", "enumerate sphere signatures with 0 < mu < 1/2 (families + exceptional)");
    Int max_param = 0;
    CommonFlags kulkarni_flags;
    kulkarni_cmd->add_option("--max-param", max_param,
                             "also expand families to concrete signatures with index <= this");
    add_common(kulkarni_cmd, kulkarni_flags);

    // classify: the full catalog.
    auto* classify_cmd =
        app.add_subcommand("classify", "classify large abelian actions up to a genus bound");
    Int classify_genus = 0;
    ClassifyOptions classify_options;
    CommonFlags classify_flags;
    classify_cmd->add_option("--max-genus", classify_genus, "largest genus to classify")->required();
    classify_cmd->add_option("--workers", classify_options.workers, "parallel workers (default 1)");
    classify_cmd->add_option("--brute-bound", classify_options.brute_bound,
                             "largest group order the exhaustive searches accept");
    add_common(classify_cmd, classify_flags);

    // construct: a single case.
    auto* construct_cmd =
        app.add_subcommand("construct", "construct the entries for one genus and group");
    Int construct_genus = 0;
    std::string construct_group;
    std::string construct_signature;
    CommonFlags construct_flags;
    construct_cmd->add_option("--genus", construct_genus, "genus of the curve")->required();
    construct_cmd->add_option("--group", construct_group, "abelian group, e.g. Z10 or Z2xZ6")
        ->required();
    construct_cmd->add_option("--signature", construct_signature,
                              "optional comma-separated branch indices, e.g. 2,5,10");
    add_common(construct_cmd, construct_flags);

    // verify: the invariant suite.
    auto* verify_cmd = app.add_subcommand("verify", "run every invariant check over the catalog");
    Int verify_genus = 0;
    verify_cmd->add_option("--max-genus", verify_genus, "largest genus to sweep")->required();

    // hyperelliptic: verdicts view.
    auto* hyper_cmd =
        app.add_subcommand("hyperelliptic", "hyperellipticity verdicts with witnesses");
    Int hyper_genus = 0;
    CommonFlags hyper_flags;
    hyper_cmd->add_option("--max-genus", hyper_genus, "largest genus to sweep")->required();
    add_common(hyper_cmd, hyper_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (kulkarni_cmd->parsed()) {
            if (max_param < 0) {
                std::cerr << "usage error: --max-param must be >= 0\n";
                return kExitUsage;
            }
            if (max_param > 10000)
                throw capacity_error("expansion to index " + std::to_string(max_param) +
                                     " exceeds the output budget");
            KulkarniCatalog catalog{enumerate_large_signatures(), max_param};
            nlohmann::ordered_json params;
            params["max_param"] = max_param;
            params["format"] = kulkarni_flags.format;
            write_output(render_kulkarni(catalog, parse_format(kulkarni_flags.format),
                                         command_echo("kulkarni", params)),
                         kulkarni_flags.output);
            return 0;
        }

        if (classify_cmd->parsed()) {
            if (classify_genus < 2) {
                std::cerr << "usage error: --max-genus must be >= 2\n";
                return kExitUsage;
            }
            auto catalog = build_classification(classify_genus, classify_options);
            nlohmann::ordered_json params;
            params["max_genus"] = classify_genus;
            params["workers"] = classify_options.workers;
            params["brute_bound"] = classify_options.brute_bound;
            params["format"] = classify_flags.format;
            write_output(render_classification(catalog, parse_format(classify_flags.format),
                                               command_echo("classify", params)),
                         classify_flags.output);
            return 0;
        }

        if (construct_cmd->parsed()) {
            if (construct_genus < 2) {
                std::cerr << "usage error: --genus must be >= 2\n";
                return kExitUsage;
            }
            AbelianGroup group = parse_group(construct_group);
            ClassificationCatalog catalog;
            catalog.max_genus = construct_genus;
            for (const auto& c : classify_abelian(construct_genus)) {
                if (c.genus != construct_genus || !(c.group == group)) continue;
                if (!construct_signature.empty()) {
                    std::vector<Int> idx;
                    std::string cur;
                    for (char ch : construct_signature + ",") {
                        if (ch >= '0' && ch <= '9') {
                            cur += ch;
                        } else if (ch == ',') {
                            if (!cur.empty()) idx.push_back(std::stoll(cur));
                            cur.clear();
                        } else {
                            throw domain_error("bad --signature value: " + construct_signature);
                        }
                    }
                    if (!(c.signature == Signature::sphere(std::move(idx)))) continue;
                }
                catalog.entries.push_back(complete_case(c));
            }
            if (catalog.entries.empty()) {
                std::cerr << "no classified case for genus " << construct_genus << " and group "
                          << group.name() << "\n";
                return 1;
            }
            nlohmann::ordered_json params;
            params["genus"] = construct_genus;
            params["group"] = group.name();
            if (!construct_signature.empty()) params["signature"] = construct_signature;
            params["format"] = construct_flags.format;
            write_output(render_classification(catalog, parse_format(construct_flags.format),
                                               command_echo("construct", params)),
                         construct_flags.output);
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (verify_genus < 2) {
                std::cerr << "usage error: --max-genus must be >= 2\n";
                return kExitUsage;
            }
            auto catalog = build_classification(verify_genus);
            auto report = verify_classification(catalog);
            std::cout << render_verify(report);
            return report.ok() ? 0 : kExitVerification;
        }

        if (hyper_cmd->parsed()) {
            if (hyper_genus < 2) {
                std::cerr << "usage error: --max-genus must be >= 2\n";
                return kExitUsage;
            }
            auto catalog = build_classification(hyper_genus);
            write_output(render_hyperelliptic(catalog), hyper_flags.output);
            return 0;
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const consistency_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const structural_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
