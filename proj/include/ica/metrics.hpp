#pragma once
// Pseudo-metrics over label sets. The distance between two labels weights how
// badly a pair of judgements disagrees; a distance of zero between distinct
// labels is legal (hence pseudo-metric).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ica/matrix.hpp"
#include "ica/validation.hpp"

namespace ica {

enum class MetricKind { discrete, interval, angular, custom_matrix };

// 0 when the labels coincide, 1 otherwise: all labels equally separated.
double discrete_distance(std::size_t i, std::size_t j);

// Euclidean norm of the difference between the labels' numeric values;
// plain absolute difference for scalars.
double interval_distance(const std::vector<double>& a, const std::vector<double>& b);

// sin^2 of the angle difference (radians). Opposed angles are at distance 0.
double angular_distance(double a, double b);

class LabelMetric {
public:
    static LabelMetric discrete();
    static LabelMetric interval(std::map<std::string, std::vector<double>> values);
    static LabelMetric interval_scalar(std::map<std::string, double> values);
    // `degrees` converts the supplied angles once, at construction.
    static LabelMetric angular(std::map<std::string, double> angles, bool degrees = false);
    static LabelMetric custom_matrix(std::vector<std::string> labels, SquareMatrix distances);

    MetricKind kind() const { return kind_; }

    // Labels the metric carries values for: custom matrix rows or value-map
    // keys. Empty for the discrete metric, which covers any label set.
    std::vector<std::string> declared_labels() const;

    // Distance between two concrete labels. Throws ConfigError if the metric
    // has no value for a label.
    double distance(const std::string& a, const std::string& b) const;

    // Full k x k distance table for a label set, ready for the alpha engine.
    SquareMatrix materialize(const std::vector<std::string>& labels) const;

private:
    LabelMetric() = default;

    MetricKind kind_ = MetricKind::discrete;
    std::map<std::string, std::vector<double>> interval_values_;
    std::map<std::string, double> angular_values_;
    std::vector<std::string> custom_labels_;
    SquareMatrix custom_distances_;
};

// Checks the pseudo-metric axioms over the given label set: symmetry, zero
// diagonal, non-negativity and, for custom matrices only, the triangle
// inequality over all k^3 triples. The built-in angular metric is exempt from
// the triangle check (sin^2 fails it for some angle triples yet is a standard
// choice, so it is accepted as-is).
ValidationReport validate_metric(const LabelMetric& metric, const std::vector<std::string>& labels);

} // namespace ica
