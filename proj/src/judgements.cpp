#include "ica/judgements.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ica {

LabelledJudgements::LabelledJudgements(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

LabelledJudgements::Item& LabelledJudgements::item_for(const std::string& item_id) {
    const auto it = item_index_.find(item_id);
    if (it != item_index_.end()) return items_[it->second];
    item_index_.emplace(item_id, items_.size());
    items_.push_back(Item{item_id, 1.0, {}});
    return items_.back();
}

void LabelledJudgements::add_judgement(const std::string& coder_id, const std::string& item_id,
                                       std::vector<std::size_t> label_set) {
    for (const std::size_t index : label_set)
        if (index >= labels_.size())
            throw std::out_of_range("judgement references label index " + std::to_string(index) +
                                    " but only " + std::to_string(labels_.size()) +
                                    " labels exist");
    std::sort(label_set.begin(), label_set.end());
    label_set.erase(std::unique(label_set.begin(), label_set.end()), label_set.end());

    Item& item = item_for(item_id);
    for (const Judgement& existing : item.judgements)
        if (existing.coder_id == coder_id)
            throw std::invalid_argument("coder '" + coder_id + "' already judged item '" +
                                        item_id + "'");
    item.judgements.push_back({coder_id, std::move(label_set)});
}

void LabelledJudgements::set_weight(const std::string& item_id, double weight) {
    if (!(weight > 0.0))
        throw std::invalid_argument("item '" + item_id + "' needs a positive weight");
    item_for(item_id).weight = weight;
}

} // namespace ica
