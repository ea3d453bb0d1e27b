#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace ica {

// The flat input of the universal alpha computation: a fixed label set and,
// per (coder, item), the set of labels the coder assigned. A judgement set may
// be empty (the coder saw the item and assigned nothing) or hold several
// labels; it is never a multiset. Each item carries a positive weight,
// defaulting to 1; continuum data weights items by span length.
//
// Items keep their first-mention order so that every downstream accumulation
// is reproducible run to run.
class LabelledJudgements {
public:
    struct Judgement {
        std::string coder_id;
        std::vector<std::size_t> label_set; // sorted, unique indexes into labels()
    };

    struct Item {
        std::string id;
        double weight = 1.0;
        std::vector<Judgement> judgements; // insertion order
    };

    explicit LabelledJudgements(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t label_count() const { return labels_.size(); }
    const std::vector<Item>& items() const { return items_; }

    // Records coder's judgement set for the item. Duplicate label indexes
    // collapse; an out-of-range index or a repeated (coder, item) pair throws.
    void add_judgement(const std::string& coder_id, const std::string& item_id,
                       std::vector<std::size_t> label_set);

    // Weight must be > 0. Creates the item if it was never judged.
    void set_weight(const std::string& item_id, double weight);

private:
    Item& item_for(const std::string& item_id);

    std::vector<std::string> labels_;
    std::vector<Item> items_;
    std::unordered_map<std::string, std::size_t> item_index_;
};

} // namespace ica
