#include "scoring.hpp"
#include "errors.hpp"
#include "tree.hpp"

#include <map>

namespace interf {

double explained_variance_fraction(const std::vector<double>& y_true,
                                   const std::vector<double>& y_pred) {
    if (y_true.size() != y_pred.size() || y_true.size() < 2)
        throw UsageError("explained_variance_fraction: need equal lengths >= 2");

    double mean = 0;
    for (double y : y_true)
        mean += y;
    mean /= static_cast<double>(y_true.size());

    double sse = 0, sst = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        double r = y_true[i] - y_pred[i];
        double c = y_true[i] - mean;
        sse += r * r;
        sst += c * c;
    }
    if (sst == 0.0)
        throw DataError("explained_variance_fraction: constant y_true, score undefined");
    return 1.0 - sse / sst;
}

double normalized_accuracy_floor(const std::vector<double>& labels) {
    if (labels.empty())
        throw UsageError("normalized_accuracy_floor: empty label vector");
    std::map<double, std::size_t> counts;
    for (double y : labels)
        ++counts[y];
    if (counts.size() < 2)
        throw DataError("normalized_accuracy_floor: single-class target, floor degenerate");
    std::size_t best = 0;
    for (const auto& [label, cnt] : counts)
        best = std::max(best, cnt);
    return static_cast<double>(best) / static_cast<double>(labels.size());
}

double normalized_accuracy(double accuracy, double floor) {
    if (floor >= 1.0)
        throw DataError("normalized_accuracy: floor = 1, score undefined");
    return (accuracy - floor) / (1.0 - floor);
}

double score_subset(const Dataset& d,
                    const SplitPlan& split,
                    const std::vector<std::size_t>& subset,
                    FloorScope floor_scope) {
    TwoTierTree tree = fit_two_tier(d, split.train_indices, subset);

    if (d.task() == Task::Regression) {
        std::vector<double> y_true, y_pred;
        y_true.reserve(split.test_indices.size());
        y_pred.reserve(split.test_indices.size());
        for (std::size_t r : split.test_indices) {
            y_true.push_back(d.target()[r]);
            y_pred.push_back(tree.predict_row(d, r));
        }
        return explained_variance_fraction(y_true, y_pred);
    }

    std::size_t correct = 0;
    for (std::size_t r : split.test_indices)
        if (tree.predict_row(d, r) == d.target()[r])
            ++correct;
    double accuracy =
        static_cast<double>(correct) / static_cast<double>(split.test_indices.size());

    std::vector<double> floor_labels;
    if (floor_scope == FloorScope::Train) {
        floor_labels.reserve(split.train_indices.size());
        for (std::size_t r : split.train_indices)
            floor_labels.push_back(d.target()[r]);
    } else {
        floor_labels = d.target();
    }
    return normalized_accuracy(accuracy, normalized_accuracy_floor(floor_labels));
}

} // namespace interf
