#include "ica/classic.hpp"

#include <algorithm>

#include "ica/errors.hpp"

namespace ica {

namespace {

void require_two_coders(const NominalRatings& ratings, const char* coefficient) {
    if (ratings.coder_count() != 2)
        throw UnsupportedError(std::string(coefficient) + " needs exactly two coders, got " +
                               std::to_string(ratings.coder_count()));
}

// Items rated by both coders, as (first coder's category, second coder's).
std::vector<std::pair<std::size_t, std::size_t>> complete_pairs(const NominalRatings& ratings) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t item = 0; item < ratings.item_count(); ++item) {
        const auto& first = ratings.ratings[0][item];
        const auto& second = ratings.ratings[1][item];
        if (first && second) pairs.emplace_back(*first, *second);
    }
    return pairs;
}

} // namespace

ClassicResult percent_agreement(const NominalRatings& ratings) {
    require_two_coders(ratings, "percent agreement");
    ClassicResult result;
    const auto pairs = complete_pairs(ratings);
    result.items_used = static_cast<std::int64_t>(pairs.size());
    result.items_excluded = static_cast<std::int64_t>(ratings.item_count() - pairs.size());
    if (pairs.empty()) {
        result.na_reason = "no items rated by both coders";
        return result;
    }
    std::int64_t agreements = 0;
    for (const auto& [a, b] : pairs)
        if (a == b) ++agreements;
    result.value = static_cast<double>(agreements) / static_cast<double>(pairs.size());
    result.p_observed = result.value;
    return result;
}

ClassicResult scott_pi(const NominalRatings& ratings) {
    require_two_coders(ratings, "Scott's pi");
    ClassicResult result;
    const auto pairs = complete_pairs(ratings);
    result.items_used = static_cast<std::int64_t>(pairs.size());
    result.items_excluded = static_cast<std::int64_t>(ratings.item_count() - pairs.size());
    if (pairs.empty()) {
        result.na_reason = "no items rated by both coders";
        return result;
    }

    const std::size_t k = ratings.category_count();
    const double m = static_cast<double>(pairs.size());
    std::vector<std::int64_t> pooled(k, 0);
    std::int64_t agreements = 0;
    for (const auto& [a, b] : pairs) {
        ++pooled[a];
        ++pooled[b];
        if (a == b) ++agreements;
    }

    const double p_o = static_cast<double>(agreements) / m;
    double p_e = 0.0;
    for (const std::int64_t count : pooled) {
        const double p = static_cast<double>(count) / (2.0 * m);
        p_e += p * p;
    }
    result.p_observed = p_o;
    result.p_chance = p_e;
    if (p_e >= 1.0) {
        result.na_reason = "expected agreement is unity";
        return result;
    }
    result.value = (p_o - p_e) / (1.0 - p_e);
    return result;
}

ContingencyMatrix contingency_matrix(const NominalRatings& ratings) {
    require_two_coders(ratings, "contingency matrix");
    ContingencyMatrix contingency{ratings.categories, SquareMatrix(ratings.category_count()), 0};
    for (const auto& [first, second] : complete_pairs(ratings)) {
        contingency.counts.at(second, first) += 1.0;
        ++contingency.items_used;
    }
    return contingency;
}

ClassicResult cohen_kappa(const NominalRatings& ratings) {
    require_two_coders(ratings, "Cohen's kappa");
    ClassicResult result;
    const auto pairs = complete_pairs(ratings);
    result.items_used = static_cast<std::int64_t>(pairs.size());
    result.items_excluded = static_cast<std::int64_t>(ratings.item_count() - pairs.size());
    if (pairs.empty()) {
        result.na_reason = "no items rated by both coders";
        return result;
    }

    const std::size_t k = ratings.category_count();
    const double m = static_cast<double>(pairs.size());
    std::vector<std::int64_t> first_marginal(k, 0), second_marginal(k, 0);
    std::int64_t agreements = 0;
    for (const auto& [a, b] : pairs) {
        ++first_marginal[a];
        ++second_marginal[b];
        if (a == b) ++agreements;
    }

    const double p_o = static_cast<double>(agreements) / m;
    double p_c = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        p_c += static_cast<double>(first_marginal[i]) * static_cast<double>(second_marginal[i]) /
               (m * m);
    result.p_observed = p_o;
    result.p_chance = p_c;
    if (p_c >= 1.0) {
        result.na_reason = "chance agreement is unity";
        return result;
    }
    const double kappa = (p_o - p_c) / (1.0 - p_c);
    result.value = kappa;
    result.band = interpret_kappa(kappa);
    return result;
}

CategoryItemCounts category_item_counts(const NominalRatings& ratings) {
    CategoryItemCounts counts;
    counts.category_count = ratings.category_count();
    counts.item_count = ratings.item_count();
    counts.counts.assign(counts.category_count,
                         std::vector<std::int64_t>(counts.item_count, 0));
    for (std::size_t coder = 0; coder < ratings.coder_count(); ++coder)
        for (std::size_t item = 0; item < ratings.item_count(); ++item)
            if (const auto& rating = ratings.ratings[coder][item])
                ++counts.counts[*rating][item];
    return counts;
}

ClassicResult fleiss_kappa(const CategoryItemCounts& counts) {
    ClassicResult result;

    std::int64_t raters = -1;
    for (std::size_t item = 0; item < counts.item_count; ++item) {
        std::int64_t n_item = 0;
        for (std::size_t category = 0; category < counts.category_count; ++category)
            n_item += counts.counts[category][item];
        if (raters < 0) raters = n_item;
        if (n_item != raters)
            throw UnsupportedError("Fleiss' kappa needs the same number of raters per item; item " +
                                   std::to_string(item + 1) + " has " + std::to_string(n_item) +
                                   " instead of " + std::to_string(raters));
    }
    if (counts.item_count == 0 || raters < 2)
        throw UnsupportedError("Fleiss' kappa needs at least two raters per item");

    const double n = static_cast<double>(raters);
    const double m = static_cast<double>(counts.item_count);

    double observed_sum = 0.0; // sum over items of the agreeing-pair rate
    for (std::size_t item = 0; item < counts.item_count; ++item) {
        std::int64_t same_pairs = 0;
        for (std::size_t category = 0; category < counts.category_count; ++category) {
            const std::int64_t c = counts.counts[category][item];
            same_pairs += c * (c - 1);
        }
        observed_sum += static_cast<double>(same_pairs) / (n * (n - 1.0));
    }
    const double p_o = observed_sum / m;

    double p_e = 0.0;
    for (std::size_t category = 0; category < counts.category_count; ++category) {
        std::int64_t total = 0;
        for (std::size_t item = 0; item < counts.item_count; ++item)
            total += counts.counts[category][item];
        const double p = static_cast<double>(total) / (n * m);
        p_e += p * p;
    }

    result.p_observed = p_o;
    result.p_chance = p_e;
    result.items_used = static_cast<std::int64_t>(counts.item_count);
    if (p_e >= 1.0) {
        result.na_reason = "expected agreement is unity";
        return result;
    }
    result.value = (p_o - p_e) / (1.0 - p_e);
    return result;
}

ClassicResult fleiss_kappa(const NominalRatings& ratings) {
    return fleiss_kappa(category_item_counts(ratings));
}

std::string interpret_kappa(double value) {
    if (value < 0.0) return "Poor";
    if (value <= 0.20) return "Slight";
    if (value <= 0.40) return "Fair";
    if (value <= 0.60) return "Moderate";
    if (value <= 0.80) return "Substantial";
    return "Almost perfect";
}

ClassicResult holsti_index(const DocumentSpans& first, const DocumentSpans& second) {
    ClassicResult result;
    std::int64_t selected_first = 0, selected_second = 0, overlap = 0;
    for (const auto& [document, spans] : first)
        selected_first += total_length(merge_spans(spans));
    for (const auto& [document, spans] : second)
        selected_second += total_length(merge_spans(spans));
    for (const auto& [document, spans] : first) {
        const auto other = second.find(document);
        if (other != second.end()) overlap += overlap_length(spans, other->second);
    }
    if (selected_first + selected_second == 0) {
        result.na_reason = "no selected matter";
        return result;
    }
    result.value = 2.0 * static_cast<double>(overlap) /
                   static_cast<double>(selected_first + selected_second);
    return result;
}

DocumentSpans coded_spans(const CodingProject& project, const std::string& coder_id) {
    DocumentSpans spans;
    for (const auto& application : project.applications) {
        if (application.coder_id != coder_id) continue;
        if (const Quotation* quotation = project.find_quotation(application.quotation_id))
            spans[quotation->document_id].push_back(quotation->span);
    }
    for (auto& [document, list] : spans) list = merge_spans(list);
    return spans;
}

} // namespace ica
