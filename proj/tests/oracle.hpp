// Test-only reference implementations, kept independent of the library's
// split search: impurities are computed directly from child partitions for
// every candidate threshold, and Spearman is computed as Pearson on ranks.
#pragma once

#include "dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

struct BestSplit {
    std::size_t feature = 0;
    double threshold = 0;
    double gain = 0; // weighted impurity decrease, absolute (summed) scale
};

inline double node_impurity_sum(const std::vector<std::size_t>& rows,
                                const interf::Dataset& d) {
    if (rows.empty())
        return 0.0;
    if (d.task() == interf::Task::Regression) {
        double mean = 0;
        for (auto r : rows)
            mean += d.target()[r];
        mean /= static_cast<double>(rows.size());
        double sse = 0;
        for (auto r : rows) {
            double dv = d.target()[r] - mean;
            sse += dv * dv;
        }
        return sse; // n * variance
    }
    std::map<double, std::size_t> counts;
    for (auto r : rows)
        ++counts[d.target()[r]];
    double n = static_cast<double>(rows.size());
    double sum_sq = 0;
    for (auto& [label, c] : counts)
        sum_sq += static_cast<double>(c) * static_cast<double>(c);
    return n * (1.0 - sum_sq / (n * n)); // n * gini
}

// Exhaustive enumeration over all (feature, midpoint) candidates.
inline std::optional<BestSplit> brute_force_best_split(
    const std::vector<std::size_t>& rows,
    const interf::Dataset& d,
    const std::vector<std::size_t>& allowed) {
    double parent = node_impurity_sum(rows, d);
    std::optional<BestSplit> best;

    for (std::size_t f : allowed) {
        std::vector<double> values;
        for (auto r : rows)
            values.push_back(d.column(f)[r]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            double threshold = (values[i] + values[i + 1]) / 2.0;
            std::vector<std::size_t> left, right;
            for (auto r : rows) {
                if (d.column(f)[r] <= threshold)
                    left.push_back(r);
                else
                    right.push_back(r);
            }
            double gain = parent - node_impurity_sum(left, d) - node_impurity_sum(right, d);
            if (!best || gain > best->gain)
                best = BestSplit{f, threshold, gain};
        }
    }
    return best;
}

// Pearson correlation of average ranks (agrees with the d^2 formulation
// exactly when neither vector has ties).
inline double pearson_of_ranks(const std::vector<double>& xs, const std::vector<double>& ys) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> order(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        std::size_t i = 0;
        while (i < order.size()) {
            std::size_t j = i;
            while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
                ++j;
            for (std::size_t t = i; t <= j; ++t)
                r[order[t]] = (static_cast<double>(i + j)) / 2.0 + 1.0;
            i = j + 1;
        }
        return r;
    };
    std::vector<double> rx = ranks(xs), ry = ranks(ys);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= static_cast<double>(rx.size());
    my /= static_cast<double>(ry.size());
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Small random datasets for property tests.
inline interf::Dataset random_dataset(std::mt19937& rng, bool classification) {
    std::uniform_int_distribution<std::size_t> n_dist(4, 30), k_dist(1, 5);
    std::uniform_int_distribution<int> coarse(0, 3);
    std::uniform_real_distribution<double> real(-5.0, 5.0);

    std::size_t n = n_dist(rng), k = k_dist(rng);
    std::vector<std::vector<double>> columns(k, std::vector<double>(n));
    std::vector<std::string> names;
    for (std::size_t c = 0; c < k; ++c) {
        names.push_back("x" + std::to_string(c));
        bool discrete = coarse(rng) == 0; // force ties in some columns
        for (std::size_t i = 0; i < n; ++i)
            columns[c][i] = discrete ? static_cast<double>(coarse(rng)) : real(rng);
    }
    std::vector<double> target(n);
    if (classification) {
        std::uniform_int_distribution<int> label(0, 2);
        target[0] = 0;
        target[1] = 1; // ensure two classes
        for (std::size_t i = 2; i < n; ++i)
            target[i] = static_cast<double>(label(rng));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            target[i] = real(rng);
    }
    return interf::Dataset(std::move(names), std::move(columns), std::move(target),
                           classification ? interf::Task::Classification
                                          : interf::Task::Regression);
}

} // namespace oracle
