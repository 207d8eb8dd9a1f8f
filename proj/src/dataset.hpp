#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace interf {

enum class Task { Regression, Classification };

/// Numeric dataset with named feature columns and a target vector.
/// Immutable after construction; safe to share across threads.
class Dataset {
public:
    Dataset(std::vector<std::string> feature_names,
            std::vector<std::vector<double>> columns,
            std::vector<double> target,
            Task task,
            std::string target_name = "target");

    std::size_t num_rows() const { return target_.size(); }
    std::size_t num_features() const { return columns_.size(); }

    const std::vector<std::string>& feature_names() const { return names_; }
    const std::vector<double>& column(std::size_t k) const { return columns_[k]; }
    const std::vector<double>& target() const { return target_; }
    const std::string& target_name() const { return target_name_; }
    Task task() const { return task_; }

    /// Index of a feature by name; throws UsageError if absent.
    std::size_t feature_index(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
    std::vector<double> target_;
    Task task_;
    std::string target_name_;
};

/// Seeded train/test partition of row indices 0..N-1.
struct SplitPlan {
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    std::uint64_t seed = 0;

    bool operator==(const SplitPlan&) const = default;
};

Dataset load_csv(const std::string& path, const std::string& target_name, Task task);
void write_csv(const Dataset& d, const std::string& path);

/// The 20-sample, 3-feature regression dataset used throughout the tests
/// (two binary features whose XOR-like pattern drives the target, plus a
/// weakly informative trend feature "s").
Dataset emit_synthetic();

/// Keep rows where lo <= value < hi on the named feature.
Dataset filter_rows(const Dataset& d, const std::string& feature, double lo, double hi);

/// Deterministic shuffled partition. The permutation comes from a
/// Fisher-Yates shuffle driven by splitmix64 seeded directly with `seed`,
/// cut at round(train_fraction * N). Depends only on (N, fraction, seed).
SplitPlan make_split(std::size_t n_rows, double train_fraction, std::uint64_t seed);

/// Shortest decimal text that round-trips the double, always carrying a
/// decimal point ("100.0", not "100").
std::string format_number(double v);

} // namespace interf
