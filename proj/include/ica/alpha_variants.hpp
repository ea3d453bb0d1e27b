#pragma once
// The four re-labelling reductions that turn span-based coding data into
// LabelledJudgements for the universal alpha engine:
//   global_binary  -- was any matter coded at all ("1"/"0" over the corpus)
//   domain_binary  -- was a given domain applied ("1"/"0" over the corpus)
//   cu             -- which code of a given domain was chosen
//   Cu             -- which set of domains was chosen (multi-label)

#include <string>
#include <vector>

#include "ica/alpha_engine.hpp"
#include "ica/core_model.hpp"
#include "ica/judgements.hpp"

namespace ica {

struct VariantSpec {
    enum class Kind { global_binary, domain_binary, cu, Cu };

    Kind kind = Kind::global_binary;
    std::string domain_id; // domain_binary and cu only

    static VariantSpec global_binary() { return {Kind::global_binary, {}}; }
    static VariantSpec domain_binary(std::string domain) {
        return {Kind::domain_binary, std::move(domain)};
    }
    static VariantSpec cu(std::string domain) { return {Kind::cu, std::move(domain)}; }
    static VariantSpec Cu() { return {Kind::Cu, {}}; }
};

std::string variant_kind_name(VariantSpec::Kind kind);

// Labels {"1","0"}. Every segment of every document participates with its
// length as weight; a coder's judgement is {"1"} iff they applied any code to
// the segment, {"0"} otherwise, so uncoded gaps count as agreement on
// irrelevance.
LabelledJudgements relabel_global_binary(const Segmentation& segmentation);

// Labels {"1","0"}; {"1"} iff the coder applied some code of the domain.
// Matter coded with other domains and uncoded matter both map to {"0"}: the
// whole corpus participates. Throws ConfigError for an unknown domain.
LabelledJudgements relabel_domain_binary(const Segmentation& segmentation,
                                         const Codebook& codebook,
                                         const std::string& domain_id);

// Labels = the domain's codes. A coder's judgement is the single code of the
// domain they applied, or absent when they applied none; segments that drew
// fewer than two such judgements are later ignored by the engine, so
// single-voted and unrelated matter never moves this coefficient.
LabelledJudgements relabel_cu(const Segmentation& segmentation, const Codebook& codebook,
                              const std::string& domain_id);

// Labels = the domain ids. A coder's judgement is the set of domains they
// applied to the segment (possibly several: the one genuinely multi-label
// variant), absent when they applied none.
LabelledJudgements relabel_Cu(const Segmentation& segmentation, const Codebook& codebook);

// unitize + relabel + universal_alpha.
AgreementResult compute_variant(const CodingProject& project, const VariantSpec& spec,
                                const LabelMetric& metric = LabelMetric::discrete(),
                                CoincidenceMatrices* out_matrices = nullptr);

// Restricts the project to the given domains: codebook keeps only those
// domains (in codebook order) and applications of other domains are dropped.
// Coders, documents and quotations are untouched. This realizes "loading only
// some codes into the analysis": matter coded solely with dropped domains
// turns into uncoded matter, which is exactly why global coefficients over a
// proper subset of the codebook are misleading and get flagged in reports.
// Throws ConfigError for unknown domain ids.
CodingProject filter_to_domains(const CodingProject& project,
                                const std::vector<std::string>& domain_ids);

} // namespace ica
