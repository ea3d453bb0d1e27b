#include <doctest.h>

#include <cmath>

#include "ica/alpha_engine.hpp"
#include "test_support.hpp"

using namespace ica;

namespace {

// The 15-item two-coder decisions as labelled judgements, labels Y then N.
LabelledJudgements slr15_judgements() {
    const std::string first = "NNNNNNYNNYYNNNY";
    const std::string second = "YYNNNYYYNYYNYNY";
    LabelledJudgements judgements({"Y", "N"});
    for (std::size_t i = 0; i < first.size(); ++i) {
        const std::string item = "#" + std::to_string(i + 1);
        judgements.add_judgement("J1", item, {first[i] == 'Y' ? 0u : 1u});
        judgements.add_judgement("J2", item, {second[i] == 'Y' ? 0u : 1u});
    }
    return judgements;
}

} // namespace

TEST_CASE("observed coincidences: screening fixture gives [[8,5],[5,12]]") {
    const SquareMatrix observed = observed_coincidences(slr15_judgements());
    CHECK(observed.at(0, 0) == 8.0);
    CHECK(observed.at(0, 1) == 5.0);
    CHECK(observed.at(1, 0) == 5.0);
    CHECK(observed.at(1, 1) == 12.0);
    CHECK(observed.sum() == 30.0);
    const auto marginals = coincidence_marginals(observed);
    CHECK(marginals[0] == 13.0);
    CHECK(marginals[1] == 17.0);
}

TEST_CASE("observed coincidences: an item judged once contributes nothing") {
    LabelledJudgements judgements({"A", "B"});
    judgements.add_judgement("J1", "solo", {0});
    const SquareMatrix observed = observed_coincidences(judgements);
    CHECK(observed.sum() == 0.0);
}

TEST_CASE("expected coincidences match the marginal formula") {
    SUBCASE("screening fixture") {
        const auto expected = expected_coincidences({13.0, 17.0}, 30.0);
        REQUIRE(expected.has_value());
        CHECK(test_support::within(expected->at(0, 0), 5.38, 0.005));
        CHECK(test_support::within(expected->at(0, 1), 7.62, 0.005));
        CHECK(test_support::within(expected->at(1, 1), 9.38, 0.005));
        CHECK(expected->symmetric());
        // row sums reproduce the marginals
        const auto rows = expected->row_sums();
        CHECK(rows[0] == doctest::Approx(13.0).epsilon(1e-12));
        CHECK(rows[1] == doctest::Approx(17.0).epsilon(1e-12));
    }
    SUBCASE("single label takes the whole mass") {
        const auto expected = expected_coincidences({6.0}, 6.0);
        REQUIRE(expected.has_value());
        CHECK(expected->at(0, 0) == 6.0);
    }
    SUBCASE("fewer than two judgements in total is refused") {
        CHECK_FALSE(expected_coincidences({1.0}, 1.0).has_value());
        CHECK_FALSE(expected_coincidences({}, 0.0).has_value());
    }
}

TEST_CASE("disagreement sums metric-weighted cells") {
    const SquareMatrix observed = observed_coincidences(slr15_judgements());
    const LabelMetric discrete = LabelMetric::discrete();
    CHECK(disagreement(observed, discrete, {"Y", "N"}) == 10.0);

    const auto expected = expected_coincidences({13.0, 17.0}, 30.0);
    CHECK(test_support::within(disagreement(*expected, discrete, {"Y", "N"}), 15.24, 0.01));

    SquareMatrix diagonal_only(2);
    diagonal_only.at(0, 0) = 4.0;
    diagonal_only.at(1, 1) = 9.0;
    CHECK(disagreement(diagonal_only, discrete, {"Y", "N"}) == 0.0);
}

TEST_CASE("universal alpha: screening fixture evaluates to 76/221") {
    const AgreementResult result = universal_alpha(slr15_judgements());
    REQUIRE(result.available());
    CHECK(*result.value == doctest::Approx(76.0 / 221.0).epsilon(1e-12));
    CHECK(test_support::within(*result.value, 0.343, 0.001));
    CHECK(result.n_paired_items == 15);
    CHECK(result.verdict == Verdict::unreliable);

    // agreement-rate route agrees with the disagreement route
    REQUIRE(result.p_observed.has_value());
    REQUIRE(result.p_expected.has_value());
    const double by_rates = (*result.p_observed - *result.p_expected) / (1.0 - *result.p_expected);
    CHECK(by_rates == doctest::Approx(*result.value).epsilon(1e-12));
}

TEST_CASE("universal alpha: total opposition on ten items gives -0.9") {
    LabelledJudgements judgements({"A", "B"});
    for (int i = 0; i < 10; ++i) {
        const std::string item = "I" + std::to_string(i);
        judgements.add_judgement("J1", item, {0});
        judgements.add_judgement("J2", item, {1});
    }
    const AgreementResult result = universal_alpha(judgements);
    REQUIRE(result.available());
    CHECK(result.observed_disagreement == 20.0);
    CHECK(result.expected_disagreement == doctest::Approx(200.0 / 19.0).epsilon(1e-15));
    CHECK(std::abs(*result.value - (-0.9)) < 1e-15);
    CHECK(result.verdict == Verdict::unreliable);
}

TEST_CASE("universal alpha: identical judgements give exactly 1") {
    LabelledJudgements judgements({"A", "B"});
    judgements.add_judgement("J1", "i1", {0});
    judgements.add_judgement("J2", "i1", {0});
    judgements.add_judgement("J1", "i2", {1});
    judgements.add_judgement("J2", "i2", {1});
    const AgreementResult result = universal_alpha(judgements);
    REQUIRE(result.available());
    CHECK(*result.value == 1.0);
    CHECK(result.observed_disagreement == 0.0);
    CHECK(result.verdict == Verdict::reliable);
}

TEST_CASE("universal alpha: multi-label judgement sets pair label by label") {
    LabelledJudgements judgements({"A", "B"});
    judgements.add_judgement("J1", "i1", {0});
    judgements.add_judgement("J2", "i1", {0});
    judgements.add_judgement("J1", "i2", {0, 1});
    judgements.add_judgement("J2", "i2", {0});
    judgements.add_judgement("J1", "i3", {1});
    judgements.add_judgement("J2", "i3", {1});

    const SquareMatrix observed = observed_coincidences(judgements);
    CHECK(observed.at(0, 0) == 4.0);
    CHECK(observed.at(0, 1) == 1.0);
    CHECK(observed.at(1, 0) == 1.0);
    CHECK(observed.at(1, 1) == 2.0);

    const AgreementResult result = universal_alpha(judgements);
    REQUIRE(result.available());
    CHECK(*result.value == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("universal alpha: degenerate data reports a reason instead of a value") {
    SUBCASE("single paired item") {
        LabelledJudgements judgements({"A", "B"});
        judgements.add_judgement("J1", "only", {0});
        judgements.add_judgement("J2", "only", {0});
        const AgreementResult result = universal_alpha(judgements);
        CHECK_FALSE(result.available());
        CHECK(result.na_reason == NaReason::insufficient_paired_items);
        CHECK(na_reason_text(result.na_reason) == "insufficient paired items");
        CHECK(result.verdict == Verdict::not_available);
    }
    SUBCASE("no paired items at all") {
        LabelledJudgements judgements({"A"});
        judgements.add_judgement("J1", "i1", {0});
        judgements.add_judgement("J2", "i2", {0});
        const AgreementResult result = universal_alpha(judgements);
        CHECK(result.na_reason == NaReason::insufficient_paired_items);
    }
    SUBCASE("everyone agrees on one label") {
        LabelledJudgements judgements({"A", "B"});
        for (const char* item : {"i1", "i2", "i3"}) {
            judgements.add_judgement("J1", item, {0});
            judgements.add_judgement("J2", item, {0});
        }
        const AgreementResult result = universal_alpha(judgements);
        CHECK_FALSE(result.available());
        CHECK(result.na_reason == NaReason::single_label);
        CHECK(na_reason_text(result.na_reason) == "single label");
    }
    SUBCASE("sub-unit weights cannot form a chance pair") {
        LabelledJudgements judgements({"A", "B"});
        judgements.set_weight("i1", 0.4);
        judgements.set_weight("i2", 0.4);
        judgements.add_judgement("J1", "i1", {0});
        judgements.add_judgement("J2", "i1", {1});
        judgements.add_judgement("J1", "i2", {0});
        judgements.add_judgement("J2", "i2", {1});
        const AgreementResult result = universal_alpha(judgements);
        CHECK_FALSE(result.available());
        CHECK(result.na_reason == NaReason::insufficient_pairs);
    }
}

TEST_CASE("verdict thresholds") {
    CHECK(verdict_for(1.0) == Verdict::reliable);
    CHECK(verdict_for(0.80) == Verdict::reliable);
    CHECK(verdict_for(0.79999) == Verdict::tentative);
    CHECK(verdict_for(0.667) == Verdict::tentative);
    CHECK(verdict_for(0.66699) == Verdict::unreliable);
    CHECK(verdict_for(0.0) == Verdict::unreliable);
    CHECK(verdict_for(-0.9) == Verdict::unreliable);

    CHECK(verdict_text(Verdict::reliable) == "reliable(≥" "0.80)");
    CHECK(verdict_text(Verdict::tentative) == "tentative(≥" "0.667)");
    CHECK(verdict_text(Verdict::unreliable) == "unreliable");
    CHECK(verdict_text(Verdict::not_available) == "not_available");
}

TEST_CASE("weights scale pair contributions") {
    LabelledJudgements judgements({"A", "B"});
    judgements.set_weight("long", 7.0);
    judgements.add_judgement("J1", "long", {0});
    judgements.add_judgement("J2", "long", {1});
    judgements.add_judgement("J1", "short", {0});
    judgements.add_judgement("J2", "short", {0});
    const SquareMatrix observed = observed_coincidences(judgements);
    CHECK(observed.at(0, 1) == 7.0);
    CHECK(observed.at(1, 0) == 7.0);
    CHECK(observed.at(0, 0) == 2.0);
}

TEST_CASE("coincidence matrices surface through the diagnostics out-parameter") {
    CoincidenceMatrices matrices;
    const AgreementResult result = universal_alpha(slr15_judgements(), LabelMetric::discrete(),
                                                   &matrices);
    REQUIRE(result.available());
    CHECK(matrices.observed.at(0, 0) == 8.0);
    CHECK(test_support::within(matrices.expected.at(0, 1), 7.62, 0.005));
    CHECK(matrices.total == 30.0);
    CHECK(matrices.marginals == std::vector<double>{13.0, 17.0});
}
