#pragma once
// Classic chance-corrected agreement coefficients for single-label nominal
// data: percent agreement, Holsti index, Scott's pi, Cohen's kappa (with
// Landis-Koch bands), Fleiss' kappa.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ica/core_model.hpp"
#include "ica/matrix.hpp"
#include "ica/span.hpp"

namespace ica {

// m items rated by n coders into k mutually exclusive categories; a rating
// may be absent (the coder skipped the item).
struct NominalRatings {
    std::vector<std::string> categories;
    std::vector<std::string> coders;
    std::vector<std::string> items;
    // ratings[coder][item] = category index, or nullopt when absent
    std::vector<std::vector<std::optional<std::size_t>>> ratings;

    std::size_t category_count() const { return categories.size(); }
    std::size_t coder_count() const { return coders.size(); }
    std::size_t item_count() const { return items.size(); }
};

// Two-coder cross-tabulation in the usual printed orientation: counts(i, j)
// is the number of items the second coder put in category i and the first
// coder put in category j. Items missing either rating are excluded.
struct ContingencyMatrix {
    std::vector<std::string> categories;
    SquareMatrix counts;
    std::int64_t items_used = 0;
};

// counts(i, item) = number of raters who assigned category i to the item.
struct CategoryItemCounts {
    std::size_t category_count = 0;
    std::size_t item_count = 0;
    std::vector<std::vector<std::int64_t>> counts; // [category][item]
};

struct ClassicResult {
    std::optional<double> value; // empty => not available
    std::string na_reason;
    std::optional<double> p_observed;
    std::optional<double> p_chance;
    std::int64_t items_used = 0;
    std::int64_t items_excluded = 0; // dropped for a missing rating
    std::string band;                // Landis-Koch, kappa results only

    bool available() const { return value.has_value(); }
};

// Share of items the two coders rated identically. Items missing a rating
// from either coder are excluded and counted in items_excluded.
// Throws UnsupportedError unless exactly two coders are present.
ClassicResult percent_agreement(const NominalRatings& ratings);

// (P_o - P_e) / (1 - P_e) with P_e from the pooled category proportions over
// both coders' judgements (2m judgements for m items). Two coders only.
ClassicResult scott_pi(const NominalRatings& ratings);

ContingencyMatrix contingency_matrix(const NominalRatings& ratings);

// (P_o - P_c) / (1 - P_c) with P_c from the product of the two coders'
// per-category proportions. Includes the Landis-Koch band.
ClassicResult cohen_kappa(const NominalRatings& ratings);

CategoryItemCounts category_item_counts(const NominalRatings& ratings);

// Requires every item to be rated by the same number (>= 2) of raters; the
// raters may differ from item to item. Throws UnsupportedError otherwise.
ClassicResult fleiss_kappa(const CategoryItemCounts& counts);
ClassicResult fleiss_kappa(const NominalRatings& ratings);

// Landis-Koch strength-of-agreement band. Boundaries follow the printed
// table; values falling between two printed ranges take the upper band.
std::string interpret_kappa(double value);

// Spans a coder selected as relevant, per document.
using DocumentSpans = std::map<std::string, std::vector<Span>>;

// 2 * overlap / (selected_1 + selected_2) over the merged span sets.
// Not available when neither coder selected anything.
ClassicResult holsti_index(const DocumentSpans& first, const DocumentSpans& second);

// Matter the coder applied any code to, merged per document.
DocumentSpans coded_spans(const CodingProject& project, const std::string& coder_id);

} // namespace ica
