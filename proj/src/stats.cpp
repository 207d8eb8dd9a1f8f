#include "stats.hpp"
#include "errors.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

namespace interf {

namespace {

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(v.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]])
            ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t)
            ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

SpearmanResult spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw UsageError("spearman: length mismatch");
    const std::size_t n = xs.size();
    if (n < 3)
        throw UsageError("spearman: need at least 3 observations");
    if (std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs[0]; }) ||
        std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; }))
        throw DataError("spearman: constant input vector");

    std::vector<double> rx = average_ranks(xs);
    std::vector<double> ry = average_ranks(ys);

    double d2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = rx[i] - ry[i];
        d2 += d * d;
    }
    const double nd = static_cast<double>(n);
    double rho = 1.0 - 6.0 * d2 / (nd * (nd * nd - 1.0));

    SpearmanResult res;
    res.rho = rho;
    if (std::abs(rho) >= 1.0) {
        res.p_value = 0.0;
        return res;
    }
    double t = rho * std::sqrt((nd - 2.0) / (1.0 - rho * rho));
    boost::math::students_t dist(nd - 2.0);
    res.p_value = 2.0 * boost::math::cdf(dist, -std::abs(t));
    return res;
}

double median(std::vector<double> values) {
    if (values.empty())
        throw UsageError("median: empty input");
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1)
        return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

DatasetSummary summarize(const std::vector<TripleRecord>& records) {
    if (records.empty())
        throw UsageError("summarize: no records");

    DatasetSummary out;
    out.triple_count = records.size();

    std::vector<double> s_values, t_values;
    std::vector<double> t_paired; // t values for records that carry a coefficient
    for (const auto& r : records) {
        t_values.push_back(r.ci_inter.mean);
        if (!r.flagged) {
            s_values.push_back(r.s_cv);
            t_paired.push_back(r.ci_inter.mean);
        }
    }
    if (s_values.empty())
        throw DataError("summarize: every record is flagged, no coefficients");

    out.s_min = *std::min_element(s_values.begin(), s_values.end());
    out.s_max = *std::max_element(s_values.begin(), s_values.end());
    out.s_median = median(s_values);
    out.t_median = median(t_values);

    if (s_values.size() >= 3) {
        try {
            out.correlation = spearman(t_paired, s_values);
        } catch (const DataError&) {
            // constant column; correlation stays absent
        }
    }
    return out;
}

} // namespace interf
