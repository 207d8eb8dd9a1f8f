#include "dataset.hpp"
#include "errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace interf {

namespace {

void validate(const std::vector<std::string>& names,
              const std::vector<std::vector<double>>& columns,
              const std::vector<double>& target,
              Task task) {
    if (names.size() != columns.size())
        throw DataError("feature_names and feature columns disagree in count");
    std::unordered_set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw DataError("duplicate feature name: " + n);
    if (target.size() < 2)
        throw DataError("dataset needs at least 2 rows");
    for (std::size_t k = 0; k < columns.size(); ++k)
        if (columns[k].size() != target.size())
            throw DataError("column " + names[k] + " length differs from target");
    if (task == Task::Classification) {
        std::set<double> labels;
        for (double y : target) {
            double ip;
            if (std::modf(y, &ip) != 0.0)
                throw DataError("classification target contains a non-integer label");
            labels.insert(y);
        }
        if (labels.size() < 2)
            throw DataError("classification target has fewer than 2 distinct labels");
    }
}

} // namespace

Dataset::Dataset(std::vector<std::string> feature_names,
                 std::vector<std::vector<double>> columns,
                 std::vector<double> target,
                 Task task,
                 std::string target_name)
    : names_(std::move(feature_names)),
      columns_(std::move(columns)),
      target_(std::move(target)),
      task_(task),
      target_name_(std::move(target_name)) {
    validate(names_, columns_, target_, task_);
}

std::size_t Dataset::feature_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw UsageError("unknown feature: " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE) {
        std::ostringstream os;
        os << "non-numeric cell '" << cell << "' at row " << row << ", column " << col;
        throw DataError(os.str());
    }
    return v;
}

} // namespace

Dataset load_csv(const std::string& path, const std::string& target_name, Task task) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw DataError("empty file: " + path);

    std::vector<std::string> header = split_line(line);
    auto target_it = std::find(header.begin(), header.end(), target_name);
    if (target_it == header.end())
        throw DataError("target column '" + target_name + "' not found in header of " + path);
    std::size_t target_col = static_cast<std::size_t>(target_it - header.begin());

    std::vector<std::string> names;
    for (std::size_t k = 0; k < header.size(); ++k)
        if (k != target_col)
            names.push_back(header[k]);

    std::vector<std::vector<double>> columns(names.size());
    std::vector<double> target;

    std::size_t row = 1;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            std::ostringstream os;
            os << "row " << row << " has " << cells.size() << " cells, expected "
               << header.size();
            throw DataError(os.str());
        }
        std::size_t fk = 0;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            double v = parse_cell(cells[k], row, k);
            if (k == target_col)
                target.push_back(v);
            else
                columns[fk++].push_back(v);
        }
        ++row;
    }
    if (target.size() < 2)
        throw DataError("fewer than 2 data rows in " + path);

    return Dataset(std::move(names), std::move(columns), std::move(target), task,
                   target_name);
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

void write_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    for (std::size_t k = 0; k < d.num_features(); ++k)
        out << d.feature_names()[k] << ',';
    out << d.target_name() << '\n';
    for (std::size_t i = 0; i < d.num_rows(); ++i) {
        for (std::size_t k = 0; k < d.num_features(); ++k)
            out << format_number(d.column(k)[i]) << ',';
        out << format_number(d.target()[i]) << '\n';
    }
    if (!out)
        throw IoError("write failed: " + path);
}

Dataset emit_synthetic() {
    // Five blocks of the four (f1, f2) combinations; block b has s = 7b and
    // targets decaying by 4 per block. f1 == f2 rows score high, f1 != f2 low.
    std::vector<double> f1, f2, s, y;
    for (int b = 0; b < 5; ++b) {
        const double high = 100.0 - 4.0 * b;
        const double low = 20.0 - 4.0 * b;
        const double sv = 7.0 * b;
        f1.insert(f1.end(), {0.0, 0.0, 1.0, 1.0});
        f2.insert(f2.end(), {0.0, 1.0, 0.0, 1.0});
        s.insert(s.end(), {sv, sv, sv, sv});
        y.insert(y.end(), {high, low, low, high});
    }
    return Dataset({"f1", "f2", "s"}, {std::move(f1), std::move(f2), std::move(s)},
                   std::move(y), Task::Regression);
}

Dataset filter_rows(const Dataset& d, const std::string& feature, double lo, double hi) {
    std::size_t k = d.feature_index(feature);
    const auto& col = d.column(k);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.num_rows(); ++i)
        if (col[i] >= lo && col[i] < hi)
            keep.push_back(i);
    if (keep.size() < 2)
        throw DataError("filter on " + feature + " leaves fewer than 2 rows");

    std::vector<std::vector<double>> columns(d.num_features());
    std::vector<double> target;
    target.reserve(keep.size());
    for (std::size_t c = 0; c < d.num_features(); ++c) {
        columns[c].reserve(keep.size());
        for (std::size_t i : keep)
            columns[c].push_back(d.column(c)[i]);
    }
    for (std::size_t i : keep)
        target.push_back(d.target()[i]);

    return Dataset(d.feature_names(), std::move(columns), std::move(target), d.task(),
                   d.target_name());
}

namespace {

// splitmix64; fixed so that seeds mean the same thing on every platform.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

} // namespace

SplitPlan make_split(std::size_t n_rows, double train_fraction, std::uint64_t seed) {
    if (n_rows < 4)
        throw DataError("make_split needs at least 4 rows");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw UsageError("train_fraction must lie in (0, 1)");

    std::size_t n_train =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n_rows)));
    if (n_train == 0 || n_train == n_rows)
        throw UsageError("train_fraction leaves an empty train or test part");

    std::vector<std::size_t> perm(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i)
        perm[i] = i;

    SplitMix64 rng{seed};
    for (std::size_t i = n_rows - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(perm[i], perm[j]);
    }

    SplitPlan plan;
    plan.seed = seed;
    plan.train_indices.assign(perm.begin(), perm.begin() + n_train);
    plan.test_indices.assign(perm.begin() + n_train, perm.end());
    return plan;
}

} // namespace interf
