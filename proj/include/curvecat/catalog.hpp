#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curvecat/curves.hpp"
#include "curvecat/kulkarni.hpp"

namespace curvecat {

inline constexpr const char* kToolVersion = "1.0.0";

// Known discrepancies between the published classification and the verified
// computation. The catalog documents them as annotations; they never alter
// results or exit codes.
struct Flag {
    std::string id;
    std::string message;
};

const std::vector<Flag>& known_flags();

// Fully constructed catalog record: classified action plus building data,
// verified model, hyperellipticity verdict, and annotations.
struct ClassificationEntry {
    AbelianGroup group;
    Signature signature;
    Int genus = 0;
    GeneratingVector vector;
    ReducedBuildingData building_data;
    CurveModel model;
    bool hyperelliptic = false;
    std::vector<std::string> flags;  // ids into known_flags()
};

// The infinite-family membership of a classified case, used for annotations.
enum class TableRow {
    CyclicTwice,   // Z_{4g+2}, {2, 2g+1, 4g+2}
    CyclicFour,    // Z_{4g},   {2, 4g, 4g}
    RankTwo,       // Z_2 x Z_{2g+2}, {2, 2g+2, 2g+2}
    FourBranch,    // Z_6, {2,2,3,3}
    Exceptional,
};

TableRow table_row_of(const ClassifiedCase& c);

// Solves the building data for a classified case, emits and verifies the
// model, and decides hyperellipticity. Throws consistency_error if any
// verification fails.
ClassificationEntry complete_case(const ClassifiedCase& c);

struct ClassificationCatalog {
    Int max_genus = 0;
    std::vector<ClassificationEntry> entries;
};

ClassificationCatalog build_classification(Int max_genus, const ClassifyOptions& options = {});

struct KulkarniCatalog {
    LargeSignatureTable table;
    Int max_param = 0;  // 0: families stay symbolic; > 0: also expand
};

enum class Format { Json, Table, Latex };
Format parse_format(const std::string& name);  // throws domain_error

// Command echo included in every document so runs are reproducible from
// their own output.
nlohmann::ordered_json command_echo(const std::string& name,
                                    const nlohmann::ordered_json& parameters);

nlohmann::ordered_json classification_json(const ClassificationCatalog& catalog,
                                           const nlohmann::ordered_json& command);
std::string render_classification(const ClassificationCatalog& catalog, Format format,
                                  const nlohmann::ordered_json& command);

nlohmann::ordered_json kulkarni_json(const KulkarniCatalog& catalog,
                                     const nlohmann::ordered_json& command);
std::string render_kulkarni(const KulkarniCatalog& catalog, Format format,
                            const nlohmann::ordered_json& command);

// Hyperellipticity view: per entry the verdict plus the witnessing involution
// and its fixed-point count when one exists.
std::string render_hyperelliptic(const ClassificationCatalog& catalog);

struct VerifyCheck {
    std::string name;
    Int pass = 0;
    Int fail = 0;
    std::vector<std::string> failures;  // diagnostics, first few
};

struct VerifyReport {
    Int max_genus = 0;
    std::vector<VerifyCheck> checks;
    std::vector<Flag> flagged;

    bool ok() const;
};

// Re-checks every invariant of the finished catalog: vector and building-
// data validity, subset generation, cyclic lcm, model round-trips, genus,
// fixed-point identities, the hyperellipticity bound, and cyclic cross-route
// existence agreement.
VerifyReport verify_classification(const ClassificationCatalog& catalog);
std::string render_verify(const VerifyReport& report);

}  // namespace curvecat
