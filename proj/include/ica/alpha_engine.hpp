#pragma once
// Universal Krippendorff alpha: observed/expected coincidence matrices,
// metric-weighted disagreements, and alpha = 1 - D_o/D_e with explicit
// degenerate-data handling instead of NaNs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ica/judgements.hpp"
#include "ica/matrix.hpp"
#include "ica/metrics.hpp"

namespace ica {

struct CoincidenceMatrices {
    SquareMatrix observed;         // o(i,j): weighted ordered label pairs
    SquareMatrix expected;         // e(i,j): chance pairs from the marginals
    std::vector<double> marginals; // t_i = sum_j o(i,j)
    double total = 0.0;            // t = sum_i t_i
};

enum class NaReason {
    none,
    insufficient_paired_items, // fewer than 2 items drew two or more judgements
    insufficient_pairs,        // total judgement mass too small for the chance model
    single_label,              // expected disagreement is zero
};

std::string na_reason_text(NaReason reason);

enum class Verdict { reliable, tentative, unreliable, not_available };

// Fixed strings; scripts grep for them.
std::string verdict_text(Verdict verdict);
Verdict verdict_for(double alpha);

struct AgreementResult {
    std::optional<double> value; // empty => not available
    NaReason na_reason = NaReason::none;
    double observed_disagreement = 0.0;
    double expected_disagreement = 0.0;
    std::int64_t n_paired_items = 0; // items that actually formed pairs
    Verdict verdict = Verdict::not_available;

    // Agreement-rate view of the same computation (diagonal masses over t).
    // Only meaningful under the discrete metric; (P_o-P_e)/(1-P_e) then equals
    // 1 - D_o/D_e.
    std::optional<double> p_observed;
    std::optional<double> p_expected;

    bool available() const { return value.has_value(); }
};

// Accumulates, for every item and every ordered pair of distinct coders who
// both left a non-empty judgement on it, the item's weight into o(i,j) for
// each label i of the first coder and j of the second. Items with fewer than
// two non-empty judgements contribute nothing. Items are processed in their
// stored order, so the result is bit-reproducible.
SquareMatrix observed_coincidences(const LabelledJudgements& judgements);

std::vector<double> coincidence_marginals(const SquareMatrix& observed);

// e(i,j) = t_i*t_j/(t-1) off the diagonal, t_i*(t_i-1)/(t-1) on it.
// Returns nothing when total < 2: no pair can be drawn.
std::optional<SquareMatrix> expected_coincidences(const std::vector<double>& marginals,
                                                  double total);

// sum_{i,j} matrix(i,j) * distance(i,j)
double disagreement(const SquareMatrix& matrix, const SquareMatrix& distance);
double disagreement(const SquareMatrix& matrix, const LabelMetric& metric,
                    const std::vector<std::string>& labels);

// Full pipeline. When `out_matrices` is given it receives the coincidence
// matrices for diagnostics (expected left empty if unavailable).
AgreementResult universal_alpha(const LabelledJudgements& judgements,
                                const LabelMetric& metric = LabelMetric::discrete(),
                                CoincidenceMatrices* out_matrices = nullptr);

} // namespace ica
