#include "ica/alpha_engine.hpp"

namespace ica {

std::string na_reason_text(NaReason reason) {
    switch (reason) {
    case NaReason::none: return "";
    case NaReason::insufficient_paired_items: return "insufficient paired items";
    case NaReason::insufficient_pairs: return "insufficient pairs";
    case NaReason::single_label: return "single label";
    }
    return "";
}

std::string verdict_text(Verdict verdict) {
    switch (verdict) {
    case Verdict::reliable: return "reliable(≥" "0.80)";
    case Verdict::tentative: return "tentative(≥" "0.667)";
    case Verdict::unreliable: return "unreliable";
    case Verdict::not_available: return "not_available";
    }
    return "not_available";
}

Verdict verdict_for(double alpha) {
    if (alpha >= 0.80) return Verdict::reliable;
    if (alpha >= 0.667) return Verdict::tentative;
    return Verdict::unreliable;
}

SquareMatrix observed_coincidences(const LabelledJudgements& judgements) {
    SquareMatrix observed(judgements.label_count());
    std::vector<const std::vector<std::size_t>*> sets;
    for (const auto& item : judgements.items()) {
        sets.clear();
        for (const auto& judgement : item.judgements)
            if (!judgement.label_set.empty()) sets.push_back(&judgement.label_set);
        if (sets.size() < 2) continue; // nothing to pair against
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = 0; b < sets.size(); ++b) {
                if (a == b) continue;
                for (const std::size_t i : *sets[a])
                    for (const std::size_t j : *sets[b]) observed.at(i, j) += item.weight;
            }
    }
    return observed;
}

std::vector<double> coincidence_marginals(const SquareMatrix& observed) {
    return observed.row_sums();
}

std::optional<SquareMatrix> expected_coincidences(const std::vector<double>& marginals,
                                                  double total) {
    if (total < 2.0) return std::nullopt;
    const std::size_t k = marginals.size();
    SquareMatrix expected(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            expected.at(i, j) = i == j ? marginals[i] * (marginals[i] - 1.0) / (total - 1.0)
                                       : marginals[i] * marginals[j] / (total - 1.0);
    return expected;
}

double disagreement(const SquareMatrix& matrix, const SquareMatrix& distance) {
    double sum = 0.0;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j)
            sum += matrix.at(i, j) * distance.at(i, j);
    return sum;
}

double disagreement(const SquareMatrix& matrix, const LabelMetric& metric,
                    const std::vector<std::string>& labels) {
    return disagreement(matrix, metric.materialize(labels));
}

AgreementResult universal_alpha(const LabelledJudgements& judgements, const LabelMetric& metric,
                                CoincidenceMatrices* out_matrices) {
    AgreementResult result;

    std::int64_t paired_items = 0;
    for (const auto& item : judgements.items()) {
        std::size_t non_empty = 0;
        for (const auto& judgement : item.judgements)
            if (!judgement.label_set.empty()) ++non_empty;
        if (non_empty >= 2) ++paired_items;
    }
    result.n_paired_items = paired_items;

    SquareMatrix observed = observed_coincidences(judgements);
    std::vector<double> marginals = coincidence_marginals(observed);
    double total = 0.0;
    for (const double t : marginals) total += t;

    if (out_matrices) {
        out_matrices->observed = observed;
        out_matrices->expected = SquareMatrix(judgements.label_count());
        out_matrices->marginals = marginals;
        out_matrices->total = total;
    }

    if (paired_items < 2) {
        result.na_reason = NaReason::insufficient_paired_items;
        return result;
    }

    auto expected = expected_coincidences(marginals, total);
    if (!expected) {
        result.na_reason = NaReason::insufficient_pairs;
        return result;
    }
    if (out_matrices) out_matrices->expected = *expected;

    const SquareMatrix distance = metric.materialize(judgements.labels());
    result.observed_disagreement = disagreement(observed, distance);
    result.expected_disagreement = disagreement(*expected, distance);

    if (!(result.expected_disagreement > 0.0)) {
        result.na_reason = NaReason::single_label;
        return result;
    }

    const double alpha = 1.0 - result.observed_disagreement / result.expected_disagreement;
    result.value = alpha;
    result.verdict = verdict_for(alpha);

    if (metric.kind() == MetricKind::discrete) {
        result.p_observed = observed.diagonal_sum() / total;
        result.p_expected = expected->diagonal_sum() / total;
    }
    return result;
}

} // namespace ica
