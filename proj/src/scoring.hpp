#pragma once

#include "dataset.hpp"

#include <vector>

namespace interf {

/// Where the classification accuracy floor is computed from.
enum class FloorScope { Train, Full };

/// 1 - SSE/SST. Throws DataError when y_true is constant (SST = 0).
double explained_variance_fraction(const std::vector<double>& y_true,
                                   const std::vector<double>& y_pred);

/// Majority-class rate: (count of the most frequent label) / N.
/// Throws DataError when only one label is present.
double normalized_accuracy_floor(const std::vector<double>& labels);

/// (a - floor) / (1 - floor); negative when a < floor.
double normalized_accuracy(double accuracy, double floor);

/// Fit a two-tier tree on the train part restricted to `subset`, evaluate on
/// the test part: explained variance fraction for regression, normalized
/// accuracy for classification (floor from training targets by default).
double score_subset(const Dataset& d,
                    const SplitPlan& split,
                    const std::vector<std::size_t>& subset,
                    FloorScope floor_scope = FloorScope::Train);

} // namespace interf
