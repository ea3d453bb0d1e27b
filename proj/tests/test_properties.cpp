#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "ica/alpha_engine.hpp"
#include "ica/alpha_variants.hpp"
#include "ica/classic.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace ica;

namespace {

constexpr int kRounds = 250;

// Rebuilds judgements with items, coders and labels optionally permuted or
// renamed; weights and sets are carried over verbatim.
LabelledJudgements rebuild(const LabelledJudgements& source,
                           const std::vector<std::size_t>& item_order,
                           bool reverse_judgements,
                           const std::vector<std::size_t>& label_map,
                           const std::vector<std::string>& new_labels,
                           const std::string& coder_prefix) {
    LabelledJudgements out(new_labels);
    for (const std::size_t index : item_order) {
        const auto& item = source.items()[index];
        out.set_weight(item.id, item.weight);
        auto judgements = item.judgements;
        if (reverse_judgements) std::reverse(judgements.begin(), judgements.end());
        for (const auto& judgement : judgements) {
            std::vector<std::size_t> mapped;
            for (const std::size_t label : judgement.label_set) mapped.push_back(label_map[label]);
            out.add_judgement(coder_prefix + judgement.coder_id, item.id, mapped);
        }
    }
    return out;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

void check_same_availability(const AgreementResult& a, const AgreementResult& b) {
    CHECK(a.available() == b.available());
    if (!a.available() && !b.available()) CHECK(a.na_reason == b.na_reason);
}

} // namespace

TEST_CASE("property: coincidence matrices are symmetric and marginal-consistent") {
    std::mt19937 rng(1001);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        const SquareMatrix observed = observed_coincidences(judgements);
        CHECK(observed.symmetric()); // integer weights: exact

        const auto marginals = coincidence_marginals(observed);
        const double total = observed.sum();
        const auto expected = expected_coincidences(marginals, total);
        if (!expected) continue;
        CHECK(expected->symmetric());
        const auto expected_rows = expected->row_sums();
        double expected_total = 0.0;
        for (std::size_t i = 0; i < marginals.size(); ++i) {
            CHECK(test_support::within(expected_rows[i], marginals[i],
                                       1e-9 * std::max(1.0, marginals[i])));
            expected_total += expected_rows[i];
        }
        CHECK(test_support::within(expected_total, total, 1e-9 * std::max(1.0, total)));
    }
}

TEST_CASE("property: renaming and reordering coders changes nothing") {
    std::mt19937 rng(1002);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        const auto identity = identity_permutation(judgements.items().size());
        const auto labels = identity_permutation(judgements.label_count());
        const LabelledJudgements renamed =
            rebuild(judgements, identity, true, labels, judgements.labels(), "renamed_");

        CHECK(observed_coincidences(judgements) == observed_coincidences(renamed));
        const AgreementResult a = universal_alpha(judgements);
        const AgreementResult b = universal_alpha(renamed);
        check_same_availability(a, b);
        if (a.available() && b.available()) CHECK(*a.value == *b.value);
    }
}

TEST_CASE("property: permuting items changes nothing") {
    std::mt19937 rng(1003);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        auto order = identity_permutation(judgements.items().size());
        std::shuffle(order.begin(), order.end(), rng);
        const auto labels = identity_permutation(judgements.label_count());
        const LabelledJudgements shuffled =
            rebuild(judgements, order, false, labels, judgements.labels(), "");

        CHECK(observed_coincidences(judgements) == observed_coincidences(shuffled));
        const AgreementResult a = universal_alpha(judgements);
        const AgreementResult b = universal_alpha(shuffled);
        check_same_availability(a, b);
        if (a.available() && b.available()) CHECK(*a.value == *b.value);
    }
}

TEST_CASE("property: permuting label identities leaves alpha unchanged (discrete)") {
    std::mt19937 rng(1004);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        auto label_map = identity_permutation(judgements.label_count());
        std::shuffle(label_map.begin(), label_map.end(), rng);
        std::vector<std::string> permuted_labels(judgements.label_count());
        for (std::size_t l = 0; l < label_map.size(); ++l)
            permuted_labels[label_map[l]] = judgements.labels()[l];
        const auto identity = identity_permutation(judgements.items().size());
        const LabelledJudgements permuted =
            rebuild(judgements, identity, false, label_map, permuted_labels, "");

        const AgreementResult a = universal_alpha(judgements);
        const AgreementResult b = universal_alpha(permuted);
        check_same_availability(a, b);
        if (a.available() && b.available())
            CHECK(*a.value == doctest::Approx(*b.value).epsilon(1e-12));
    }
}

TEST_CASE("property: coincidences add over disjoint item batches") {
    std::mt19937 rng(1005);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        std::vector<std::size_t> first_batch, second_batch;
        for (std::size_t i = 0; i < judgements.items().size(); ++i)
            (gen::chance(rng, 0.5) ? first_batch : second_batch).push_back(i);

        const auto labels = identity_permutation(judgements.label_count());
        const LabelledJudgements first =
            rebuild(judgements, first_batch, false, labels, judgements.labels(), "");
        const LabelledJudgements second =
            rebuild(judgements, second_batch, false, labels, judgements.labels(), "");

        const SquareMatrix whole = observed_coincidences(judgements);
        const SquareMatrix part_a = observed_coincidences(first);
        const SquareMatrix part_b = observed_coincidences(second);
        for (std::size_t i = 0; i < whole.size(); ++i)
            for (std::size_t j = 0; j < whole.size(); ++j)
                CHECK(whole.at(i, j) == part_a.at(i, j) + part_b.at(i, j));
    }
}

TEST_CASE("property: an integer weight w equals w unit-weight copies exactly") {
    std::mt19937 rng(1006);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements weighted = gen::random_judgements(rng);
        LabelledJudgements replicated(weighted.labels());
        for (const auto& item : weighted.items()) {
            const int copies = static_cast<int>(item.weight);
            for (int copy = 0; copy < copies; ++copy) {
                const std::string id = item.id + "#" + std::to_string(copy);
                for (const auto& judgement : item.judgements)
                    replicated.add_judgement(judgement.coder_id, id, judgement.label_set);
            }
        }

        CHECK(observed_coincidences(weighted) == observed_coincidences(replicated));
        const AgreementResult a = universal_alpha(weighted);
        const AgreementResult b = universal_alpha(replicated);
        // Replication multiplies the paired-item count but never crosses the
        // degeneracy thresholds in the other direction.
        if (a.available()) {
            REQUIRE(b.available());
            CHECK(*a.value == *b.value);
        }
    }
}

TEST_CASE("property: the ordered-pair oracle reproduces observed coincidences") {
    std::mt19937 rng(1007);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        CHECK(observed_coincidences(judgements) == oracle::coincidences(judgements));
    }
}

TEST_CASE("property: Fleiss' kappa equals Scott's pi for two coders") {
    std::mt19937 rng(1008);
    for (int round = 0; round < kRounds; ++round) {
        const NominalRatings ratings = gen::random_ratings(rng, 2);
        const ClassicResult pi = scott_pi(ratings);
        const ClassicResult fleiss = fleiss_kappa(ratings);
        CHECK(pi.available() == fleiss.available());
        if (pi.available() && fleiss.available())
            CHECK(*pi.value == doctest::Approx(*fleiss.value).epsilon(1e-12));
    }
}

TEST_CASE("property: o(i,j) = c(i,j) + c(j,i) for two-coder single-label data") {
    std::mt19937 rng(1009);
    for (int round = 0; round < kRounds; ++round) {
        const NominalRatings ratings = gen::random_ratings(rng, 2);
        LabelledJudgements judgements(ratings.categories);
        for (std::size_t item = 0; item < ratings.item_count(); ++item)
            for (std::size_t coder = 0; coder < 2; ++coder)
                judgements.add_judgement(ratings.coders[coder], ratings.items[item],
                                         {*ratings.ratings[coder][item]});

        const SquareMatrix observed = observed_coincidences(judgements);
        const ContingencyMatrix contingency = contingency_matrix(ratings);
        for (std::size_t i = 0; i < observed.size(); ++i)
            for (std::size_t j = 0; j < observed.size(); ++j)
                CHECK(observed.at(i, j) ==
                      contingency.counts.at(i, j) + contingency.counts.at(j, i));
    }
}

TEST_CASE("property: alpha never exceeds 1 under non-negative metrics") {
    std::mt19937 rng(1010);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        LabelMetric metric = LabelMetric::discrete();
        const int which = gen::pick(rng, 0, 2);
        if (which == 1) {
            std::map<std::string, double> values;
            for (const auto& label : judgements.labels())
                values[label] = gen::pick(rng, -3, 3);
            metric = LabelMetric::interval_scalar(values);
        } else if (which == 2) {
            std::map<std::string, double> angles;
            for (const auto& label : judgements.labels())
                angles[label] = gen::pick(rng, 0, 359);
            metric = LabelMetric::angular(angles, true);
        }
        const AgreementResult result = universal_alpha(judgements, metric);
        if (result.available()) CHECK(*result.value <= 1.0 + 1e-12);
    }
}

TEST_CASE("property: alpha is 1 exactly when observed disagreement vanishes") {
    std::mt19937 rng(1011);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        const AgreementResult result = universal_alpha(judgements);
        if (!result.available()) continue;
        CHECK((*result.value == 1.0) == (result.observed_disagreement == 0.0));
    }
}

TEST_CASE("property: agreement-rate and disagreement routes agree (discrete)") {
    std::mt19937 rng(1012);
    for (int round = 0; round < kRounds; ++round) {
        const LabelledJudgements judgements = gen::random_judgements(rng);
        const AgreementResult result = universal_alpha(judgements);
        if (!result.available()) continue;
        REQUIRE(result.p_observed.has_value());
        REQUIRE(result.p_expected.has_value());
        if (1.0 - *result.p_expected == 0.0) continue;
        const double by_rates =
            (*result.p_observed - *result.p_expected) / (1.0 - *result.p_expected);
        CHECK(test_support::within(by_rates, *result.value,
                                   1e-12 * std::max(1.0, std::abs(*result.value))));
    }
}

TEST_CASE("property: unitize covers every document exactly once") {
    std::mt19937 rng(1013);
    for (int round = 0; round < kRounds; ++round) {
        const CodingProject project = gen::random_project(rng);
        REQUIRE(validate_coding(project).valid());
        const Segmentation segmentation = unitize(project);
        REQUIRE(segmentation.documents.size() == project.documents.size());
        for (std::size_t d = 0; d < project.documents.size(); ++d) {
            std::int64_t sum = 0;
            std::int64_t cursor = 0;
            for (const auto& segment : segmentation.documents[d].segments) {
                CHECK(segment.span.start == cursor); // contiguous, in order
                cursor = segment.span.end;
                sum += segment.span.length();
            }
            CHECK(sum == project.documents[d].length);
        }
    }
}

TEST_CASE("property: unitize is idempotent") {
    std::mt19937 rng(1014);
    for (int round = 0; round < kRounds; ++round) {
        const CodingProject project = gen::random_project(rng);
        const Segmentation first = unitize(project);
        const Segmentation second =
            unitize(segmentation_to_project(first, project.codebook));
        REQUIRE(first.documents.size() == second.documents.size());
        for (std::size_t d = 0; d < first.documents.size(); ++d) {
            REQUIRE(first.documents[d].segments.size() == second.documents[d].segments.size());
            for (std::size_t s = 0; s < first.documents[d].segments.size(); ++s) {
                CHECK(first.documents[d].segments[s].span ==
                      second.documents[d].segments[s].span);
                CHECK(first.documents[d].segments[s].codes_per_coder ==
                      second.documents[d].segments[s].codes_per_coder);
            }
        }
    }
}

TEST_CASE("property: binary relabellings weigh the whole corpus") {
    std::mt19937 rng(1015);
    for (int round = 0; round < kRounds; ++round) {
        const CodingProject project = gen::random_project(rng);
        std::int64_t corpus = 0;
        for (const auto& document : project.documents) corpus += document.length;

        const Segmentation segmentation = unitize(project);
        double global_weight = 0.0;
        for (const auto& item : relabel_global_binary(segmentation).items())
            global_weight += item.weight;
        CHECK(global_weight == static_cast<double>(corpus));

        for (const auto& domain : project.codebook.domains) {
            double domain_weight = 0.0;
            for (const auto& item :
                 relabel_domain_binary(segmentation, project.codebook, domain.id).items())
                domain_weight += item.weight;
            CHECK(domain_weight == static_cast<double>(corpus));
        }
    }
}

TEST_CASE("property: Cu-alpha equals cu-alpha over a synthetic domain of domains") {
    std::mt19937 rng(1016);
    for (int round = 0; round < kRounds; ++round) {
        CodingProject project = gen::random_project(rng);
        // Enforce at most one domain per (coder, quotation): keep the first.
        std::set<std::pair<std::string, std::string>> seen;
        std::vector<CodeApplication> kept;
        for (const auto& application : project.applications)
            if (seen.insert({application.coder_id, application.quotation_id}).second)
                kept.push_back(application);
        project.applications = std::move(kept);

        CodingProject synthetic = project;
        synthetic.codebook.domains.clear();
        SemanticDomain all{"ALL", "", {}};
        for (const auto& domain : project.codebook.domains)
            all.codes.push_back({domain.id, domain.id});
        synthetic.codebook.domains.push_back(std::move(all));
        for (auto& application : synthetic.applications)
            application.code_id =
                project.codebook.domain_of_code(application.code_id)->id;

        const AgreementResult Cu = compute_variant(project, VariantSpec::Cu());
        const AgreementResult cu = compute_variant(synthetic, VariantSpec::cu("ALL"));
        check_same_availability(Cu, cu);
        if (Cu.available() && cu.available())
            CHECK(*Cu.value == doctest::Approx(*cu.value).epsilon(1e-15));
    }
}

TEST_CASE("property: a single-voted quotation never helps the binary coefficient "
          "and never moves cu") {
    std::mt19937 rng(1017);
    for (int round = 0; round < kRounds; ++round) {
        const CodingProject base = gen::random_project(rng, 3, 2); // two coders
        if (base.codebook.domains.empty()) continue;

        CodingProject with = base;
        // Fresh matter holding exactly the single-voted quotation.
        const std::int64_t extent = gen::pick(rng, 1, 9);
        with.documents.push_back({"extra_doc", extent});
        with.quotations.push_back({"extra_q", "extra_doc", {0, extent}});
        const auto& domain =
            with.codebook.domains[gen::pick(rng, 0, static_cast<int>(
                                                        with.codebook.domains.size()) - 1)];
        with.applications.push_back({with.coders[0].id, "extra_q", domain.codes[0].id});

        const AgreementResult cu_with = compute_variant(with, VariantSpec::cu(domain.id));
        CodingProject without = base;
        without.documents.push_back({"extra_doc", extent}); // same corpus, no quotation
        const AgreementResult cu_without = compute_variant(without, VariantSpec::cu(domain.id));
        check_same_availability(cu_with, cu_without);
        if (cu_with.available()) CHECK(*cu_with.value == *cu_without.value);

        const AgreementResult binary_with =
            compute_variant(with, VariantSpec::domain_binary(domain.id));
        const AgreementResult binary_without =
            compute_variant(without, VariantSpec::domain_binary(domain.id));
        if (binary_with.available() && binary_without.available())
            CHECK(*binary_with.value <= *binary_without.value + 1e-12);
    }
}

TEST_CASE("property: validation reports are deterministic") {
    std::mt19937 rng(1018);
    for (int round = 0; round < kRounds; ++round) {
        CodingProject project = gen::random_project(rng);
        // Sprinkle in breakage so reports are non-trivial.
        if (gen::chance(rng, 0.5))
            project.applications.push_back({"ghost", "nowhere", "nothing"});
        if (gen::chance(rng, 0.3) && !project.codebook.domains.empty())
            project.codebook.domains.push_back(project.codebook.domains[0]);
        CHECK(validate_coding(project) == validate_coding(project));
        CHECK(validate_codebook(project.codebook) == validate_codebook(project.codebook));
    }
}
