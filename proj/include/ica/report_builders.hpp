#pragma once
// Assembles Report objects for the CLI front end. All coefficient selection,
// ordering and diagnostics live here so that command output is exactly
// library output.

#include <string>
#include <vector>

#include "ica/classic.hpp"
#include "ica/core_model.hpp"
#include "ica/ingestion.hpp"

namespace ica {

inline constexpr const char* kSubsetWarning = "global coefficients computed on domain subset";

struct ClassicSelection {
    bool percent = false;
    bool pi = false;
    bool kappa = false;
    bool fleiss = false;

    bool any() const { return percent || pi || kappa || fleiss; }
    static ClassicSelection all() { return {true, true, true, true}; }
};

// percent / pi / kappa / fleiss in that fixed order; adds the contingency
// matrix when a chance-corrected two-coder coefficient was requested.
Report build_classic_report(const NominalRatings& ratings, const ClassicSelection& selection,
                            std::string source);

// Holsti index over the two coders' coded matter.
Report build_holsti_report(const CodingProject& project, std::string source);

// Universal alpha over flat single-label data, with coincidence matrices.
Report build_alpha_report(const NominalRatings& ratings, const LabelMetric& metric,
                          std::string source);

struct VariantSelection {
    std::vector<std::string> domains; // empty => every codebook domain
    bool binary = false;
    bool cu = false;
    bool Cu = false;
    bool global = false;

    bool any() const { return binary || cu || Cu || global; }
};

// Per-domain coefficients run over the full project; global coefficients run
// over the project filtered to the selected domains, which is flagged with
// kSubsetWarning whenever the selection is a proper subset.
Report build_variants_report(const CodingProject& project, const VariantSelection& selection,
                             std::string source);

// Everything at once: all four variants over all domains with coincidence
// matrices, the Holsti index (two-coder projects), and per-code coverage.
Report build_project_report(const CodingProject& project, std::string source);

// Classic family plus universal alpha for a reliability CSV.
Report build_csv_report(const NominalRatings& ratings, std::string source);

} // namespace ica
