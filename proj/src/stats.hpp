#pragma once

#include "crossval.hpp"

#include <optional>
#include <vector>

namespace interf {

struct SpearmanResult {
    double rho = 0;
    double p_value = 0;
};

/// Spearman rank correlation with average ranks for ties, using the
/// classical rho = 1 - 6*sum(d^2)/(n(n^2-1)) statistic; two-sided p-value
/// from the t-approximation with n-2 degrees of freedom.
SpearmanResult spearman(const std::vector<double>& xs, const std::vector<double>& ys);

/// Middle value (odd n) or mean of the two middle values (even n).
double median(std::vector<double> values);

/// Per-dataset aggregate over scan records: count, coefficient spread,
/// median pre-elimination score, and the rank correlation between the two.
struct DatasetSummary {
    std::size_t triple_count = 0;
    double s_min = 0, s_median = 0, s_max = 0;
    double t_median = 0;
    std::optional<SpearmanResult> correlation; // absent when usable Q < 3
};

DatasetSummary summarize(const std::vector<TripleRecord>& records);

} // namespace interf
