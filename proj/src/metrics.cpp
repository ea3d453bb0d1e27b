#include "ica/metrics.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "ica/errors.hpp"

namespace ica {

double discrete_distance(std::size_t i, std::size_t j) {
    return i == j ? 0.0 : 1.0;
}

double interval_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw ConfigError("interval metric: label values have different dimensions");
    double sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

double angular_distance(double a, double b) {
    const double s = std::sin(a - b);
    return s * s;
}

LabelMetric LabelMetric::discrete() {
    LabelMetric m;
    m.kind_ = MetricKind::discrete;
    return m;
}

LabelMetric LabelMetric::interval(std::map<std::string, std::vector<double>> values) {
    LabelMetric m;
    m.kind_ = MetricKind::interval;
    m.interval_values_ = std::move(values);
    return m;
}

LabelMetric LabelMetric::interval_scalar(std::map<std::string, double> values) {
    std::map<std::string, std::vector<double>> vectors;
    for (const auto& [label, v] : values) vectors.emplace(label, std::vector<double>{v});
    return interval(std::move(vectors));
}

LabelMetric LabelMetric::angular(std::map<std::string, double> angles, bool degrees) {
    LabelMetric m;
    m.kind_ = MetricKind::angular;
    if (degrees) {
        for (auto& [label, v] : angles) v *= std::numbers::pi / 180.0;
    }
    m.angular_values_ = std::move(angles);
    return m;
}

LabelMetric LabelMetric::custom_matrix(std::vector<std::string> labels, SquareMatrix distances) {
    if (labels.size() != distances.size())
        throw ConfigError("custom metric: label list and matrix size disagree");
    LabelMetric m;
    m.kind_ = MetricKind::custom_matrix;
    m.custom_labels_ = std::move(labels);
    m.custom_distances_ = std::move(distances);
    return m;
}

std::vector<std::string> LabelMetric::declared_labels() const {
    std::vector<std::string> labels;
    switch (kind_) {
    case MetricKind::discrete: break;
    case MetricKind::interval:
        for (const auto& [label, values] : interval_values_) labels.push_back(label);
        break;
    case MetricKind::angular:
        for (const auto& [label, angle] : angular_values_) labels.push_back(label);
        break;
    case MetricKind::custom_matrix: labels = custom_labels_; break;
    }
    return labels;
}

double LabelMetric::distance(const std::string& a, const std::string& b) const {
    switch (kind_) {
    case MetricKind::discrete:
        return a == b ? 0.0 : 1.0;
    case MetricKind::interval: {
        const auto ia = interval_values_.find(a);
        const auto ib = interval_values_.find(b);
        if (ia == interval_values_.end() || ib == interval_values_.end())
            throw ConfigError("interval metric: no value assigned to label '" +
                              (ia == interval_values_.end() ? a : b) + "'");
        return interval_distance(ia->second, ib->second);
    }
    case MetricKind::angular: {
        const auto ia = angular_values_.find(a);
        const auto ib = angular_values_.find(b);
        if (ia == angular_values_.end() || ib == angular_values_.end())
            throw ConfigError("angular metric: no angle assigned to label '" +
                              (ia == angular_values_.end() ? a : b) + "'");
        return angular_distance(ia->second, ib->second);
    }
    case MetricKind::custom_matrix: {
        std::size_t pa = custom_labels_.size(), pb = custom_labels_.size();
        for (std::size_t i = 0; i < custom_labels_.size(); ++i) {
            if (custom_labels_[i] == a) pa = i;
            if (custom_labels_[i] == b) pb = i;
        }
        if (pa == custom_labels_.size() || pb == custom_labels_.size())
            throw ConfigError("custom metric: no row for label '" +
                              (pa == custom_labels_.size() ? a : b) + "'");
        return custom_distances_.at(pa, pb);
    }
    }
    throw ConfigError("unknown metric kind");
}

SquareMatrix LabelMetric::materialize(const std::vector<std::string>& labels) const {
    SquareMatrix table(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            table.at(i, j) = distance(labels[i], labels[j]);
    return table;
}

ValidationReport validate_metric(const LabelMetric& metric, const std::vector<std::string>& labels) {
    ValidationReport report;
    SquareMatrix table(0);
    try {
        table = metric.materialize(labels);
    } catch (const ConfigError& e) {
        report.add("metric-missing-value", e.what());
        return report;
    }

    const std::size_t k = labels.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (table.at(i, i) != 0.0)
            report.add("metric-diagonal",
                       "distance(" + labels[i] + ", " + labels[i] + ") must be 0, got " +
                           std::to_string(table.at(i, i)));
        for (std::size_t j = 0; j < k; ++j) {
            if (table.at(i, j) < 0.0)
                report.add("metric-negative", "distance(" + labels[i] + ", " + labels[j] +
                                                  ") is negative");
            if (j > i && table.at(i, j) != table.at(j, i))
                report.add("metric-symmetry", "distance(" + labels[i] + ", " + labels[j] +
                                                  ") differs from its mirror");
        }
    }

    if (metric.kind() == MetricKind::custom_matrix) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t via = 0; via < k; ++via)
                    if (table.at(i, j) > table.at(i, via) + table.at(via, j) + 1e-12)
                        report.add("metric-triangle",
                                   "distance(" + labels[i] + ", " + labels[j] +
                                       ") exceeds the path through " + labels[via]);
    }
    return report;
}

} // namespace ica
