#include "tree.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace interf {

namespace {

bool all_targets_equal(const std::vector<std::size_t>& rows, const std::vector<double>& y) {
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (y[rows[i]] != y[rows[0]])
            return false;
    return true;
}

// Both impurity criteria reduce to maximizing
//   score(L) + score(R), score(part) = (sum stats)^2 / n
// regression: score = (sum y)^2 / n        (variance reduction)
// classification: score = sum_c count_c^2 / n   (Gini decrease)
struct RegressionScan {
    double sum_left = 0, sum_total = 0;
    std::size_t n_left = 0, n_total = 0;

    void add_total(double y) { sum_total += y; ++n_total; }
    void move_left(double y) { sum_left += y; ++n_left; }
    double gain() const {
        double sr = sum_total - sum_left;
        std::size_t nr = n_total - n_left;
        return sum_left * sum_left / static_cast<double>(n_left) +
               sr * sr / static_cast<double>(nr) -
               sum_total * sum_total / static_cast<double>(n_total);
    }
    void reset_left() {
        sum_left = 0;
        n_left = 0;
    }
};

struct GiniScan {
    std::map<double, std::size_t> left, total;
    std::size_t n_left = 0, n_total = 0;

    void add_total(double y) {
        ++total[y];
        ++n_total;
    }
    void move_left(double y) {
        ++left[y];
        ++n_left;
    }
    double gain() const {
        double sl = 0, sr = 0, st = 0;
        for (const auto& [label, cnt] : total) {
            auto it = left.find(label);
            std::size_t cl = it == left.end() ? 0 : it->second;
            std::size_t cr = cnt - cl;
            sl += static_cast<double>(cl) * static_cast<double>(cl);
            sr += static_cast<double>(cr) * static_cast<double>(cr);
            st += static_cast<double>(cnt) * static_cast<double>(cnt);
        }
        std::size_t nr = n_total - n_left;
        return sl / static_cast<double>(n_left) + sr / static_cast<double>(nr) -
               st / static_cast<double>(n_total);
    }
    void reset_left() {
        left.clear();
        n_left = 0;
    }
};

template <typename Scan>
std::optional<Split> scan_features(const std::vector<std::size_t>& rows,
                                   const Dataset& d,
                                   const std::vector<std::size_t>& allowed) {
    std::optional<Split> best;
    double best_gain = 0.0;
    bool have_best = false;

    std::vector<std::pair<double, double>> xy;
    xy.reserve(rows.size());

    for (std::size_t feature : allowed) {
        const auto& col = d.column(feature);
        xy.clear();
        for (std::size_t r : rows)
            xy.emplace_back(col[r], d.target()[r]);
        std::sort(xy.begin(), xy.end());

        Scan scan;
        for (const auto& [x, y] : xy)
            scan.add_total(y);
        scan.reset_left();

        for (std::size_t i = 0; i + 1 < xy.size(); ++i) {
            scan.move_left(xy[i].second);
            if (xy[i].first == xy[i + 1].first)
                continue;
            double gain = scan.gain();
            if (!have_best || gain > best_gain) {
                best_gain = gain;
                best = Split{feature, xy[i].first + (xy[i + 1].first - xy[i].first) / 2.0};
                have_best = true;
            }
        }
    }
    return best;
}

std::unique_ptr<Node> grow(const Dataset& d,
                           std::vector<std::size_t> rows,
                           const std::vector<std::size_t>& allowed,
                           int depth) {
    auto node = std::make_unique<Node>();
    node->n_samples = rows.size();

    if (d.task() == Task::Regression) {
        double sum = 0;
        for (std::size_t r : rows)
            sum += d.target()[r];
        node->prediction = sum / static_cast<double>(rows.size());
    } else {
        std::map<double, std::size_t> counts;
        for (std::size_t r : rows)
            ++counts[d.target()[r]];
        // ascending label order, strict > keeps the smallest label on ties
        std::size_t best = 0;
        for (const auto& [label, cnt] : counts) {
            if (cnt > best) {
                best = cnt;
                node->prediction = label;
            }
        }
    }

    if (depth >= 2 || rows.size() < 2)
        return node;

    std::optional<Split> split = best_split(rows, d, allowed);
    if (!split)
        return node;

    std::vector<std::size_t> left_rows, right_rows;
    const auto& col = d.column(split->feature_index);
    for (std::size_t r : rows) {
        if (col[r] <= split->threshold)
            left_rows.push_back(r);
        else
            right_rows.push_back(r);
    }

    node->split = split;
    node->left = grow(d, std::move(left_rows), allowed, depth + 1);
    node->right = grow(d, std::move(right_rows), allowed, depth + 1);
    return node;
}

} // namespace

std::optional<Split> best_split(const std::vector<std::size_t>& rows,
                                const Dataset& d,
                                const std::vector<std::size_t>& allowed) {
    if (rows.empty() || allowed.empty())
        return std::nullopt;
    if (all_targets_equal(rows, d.target()))
        return std::nullopt;

    std::vector<std::size_t> features(allowed);
    std::sort(features.begin(), features.end());
    features.erase(std::unique(features.begin(), features.end()), features.end());

    if (d.task() == Task::Regression)
        return scan_features<RegressionScan>(rows, d, features);
    return scan_features<GiniScan>(rows, d, features);
}

TwoTierTree fit_two_tier(const Dataset& d,
                         const std::vector<std::size_t>& train,
                         const std::vector<std::size_t>& subset) {
    if (subset.empty())
        throw UsageError("fit_two_tier: empty feature subset");
    if (train.size() < 2)
        throw DataError("fit_two_tier: need at least 2 training rows");

    std::vector<std::size_t> allowed(subset);
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    for (std::size_t f : allowed)
        if (f >= d.num_features())
            throw UsageError("fit_two_tier: feature index out of range");

    auto root = grow(d, train, allowed, 0);
    return TwoTierTree(std::move(root), std::move(allowed), d.task());
}

double TwoTierTree::predict_row(const Dataset& d, std::size_t row) const {
    const Node* node = root_.get();
    while (!node->is_leaf()) {
        const auto& col = d.column(node->split->feature_index);
        node = col[row] <= node->split->threshold ? node->left.get() : node->right.get();
    }
    return node->prediction;
}

namespace {

void render_node(const Node& node, const Dataset& d, int indent, std::ostringstream& os) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_leaf()) {
        os << pad << "leaf: " << format_number(node.prediction) << " (n=" << node.n_samples
           << ")\n";
        return;
    }
    os << pad << d.feature_names()[node.split->feature_index]
       << " <= " << format_number(node.split->threshold) << " (n=" << node.n_samples << ")\n";
    render_node(*node.left, d, indent + 1, os);
    render_node(*node.right, d, indent + 1, os);
}

} // namespace

std::string TwoTierTree::render(const Dataset& d) const {
    std::ostringstream os;
    render_node(*root_, d, 0, os);
    return os.str();
}

} // namespace interf
