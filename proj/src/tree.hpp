#pragma once

#include "dataset.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace interf {

/// A row goes left iff value <= threshold.
struct Split {
    std::size_t feature_index = 0;
    double threshold = 0.0;
};

struct Node {
    // Leaf when !split; prediction is the training-target mean (regression)
    // or the majority class label (classification).
    std::optional<Split> split;
    double prediction = 0.0;
    std::size_t n_samples = 0;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;

    bool is_leaf() const { return !split.has_value(); }
};

/// Depth-2 greedy CART tree restricted to a feature subset.
class TwoTierTree {
public:
    TwoTierTree(std::unique_ptr<Node> root, std::vector<std::size_t> subset, Task task)
        : root_(std::move(root)), subset_(std::move(subset)), task_(task) {}

    const Node& root() const { return *root_; }
    const std::vector<std::size_t>& feature_subset() const { return subset_; }
    Task task() const { return task_; }

    double predict_row(const Dataset& d, std::size_t row) const;

    /// Indented text rendering: "name <= threshold" per internal node,
    /// "leaf: value (n=...)" per leaf.
    std::string render(const Dataset& d) const;

private:
    std::unique_ptr<Node> root_;
    std::vector<std::size_t> subset_;
    Task task_;
};

/// Best (feature, midpoint-threshold) split over `allowed`, maximizing
/// impurity decrease (variance for regression, Gini for classification).
/// Ties go to the lowest feature index, then the lowest threshold. A pure
/// node, or one with no candidate threshold, yields nullopt; a zero-decrease
/// split on an impure node is still taken.
std::optional<Split> best_split(const std::vector<std::size_t>& rows,
                                const Dataset& d,
                                const std::vector<std::size_t>& allowed);

TwoTierTree fit_two_tier(const Dataset& d,
                         const std::vector<std::size_t>& train,
                         const std::vector<std::size_t>& subset);

} // namespace interf
