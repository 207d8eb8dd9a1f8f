#include "crossval.hpp"
#include "errors.hpp"
#include "interference.hpp"
#include "tree.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace interf {

std::vector<std::uint64_t> seed_sequence(std::uint64_t base, std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t j = 0; j < count; ++j)
        seeds[j] = base + j + 1;
    return seeds;
}

namespace {

double score_one(const Dataset& d,
                 const std::vector<std::size_t>& subset,
                 const SplitPlan& plan,
                 FloorScope floor_scope) {
    try {
        return score_subset(d, plan, subset, floor_scope);
    } catch (const DataError& e) {
        std::ostringstream os;
        os << "seed " << plan.seed << ": " << e.what();
        throw DataError(os.str());
    }
}

// Runs fn(i) for i in [0, n) across `workers` threads. The first exception
// wins; indices are claimed from an atomic counter, results must be written
// to pre-sized slots so the schedule cannot change the output.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace

ScoreSample cv_scores(const Dataset& d,
                      const std::vector<std::size_t>& subset,
                      const std::vector<std::uint64_t>& seeds,
                      double train_fraction,
                      FloorScope floor_scope) {
    if (seeds.size() < 2)
        throw UsageError("cv_scores: need at least 2 seeds");

    ScoreSample sample;
    sample.subset = subset;
    sample.scores.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
        SplitPlan plan = make_split(d.num_rows(), train_fraction, seed);
        sample.scores.push_back(score_one(d, subset, plan, floor_scope));
    }
    return sample;
}

MeanCI mean_ci(const std::vector<double>& scores, double alpha) {
    if (scores.size() < 2)
        throw UsageError("mean_ci: need at least 2 scores");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw UsageError("mean_ci: alpha must lie in (0, 1)");

    const double n = static_cast<double>(scores.size());
    double sum = 0;
    for (double s : scores)
        sum += s;
    double mean = sum / n;

    double ss = 0;
    for (double s : scores) {
        double dlt = s - mean;
        ss += dlt * dlt;
    }
    double sd = std::sqrt(ss / (n - 1.0));

    boost::math::students_t dist(n - 1.0);
    double crit = boost::math::quantile(dist, 1.0 - alpha / 2.0);
    double half = crit * sd / std::sqrt(n);

    return MeanCI{mean - half, mean + half, mean};
}

std::optional<SCvBounds> s_cv_bounds(const MeanCI& ci_elim, const MeanCI& ci_inter) {
    if (ci_inter.lo <= 0.0)
        return std::nullopt;
    SCvBounds b;
    b.s_min = ci_elim.lo / ci_inter.hi;
    b.s_max = ci_elim.hi / ci_inter.lo;
    b.s_cv = (b.s_min + b.s_max) / 2.0;
    return b;
}

namespace {

double mean_of(const std::vector<double>& xs) {
    double sum = 0;
    for (double x : xs)
        sum += x;
    return sum / static_cast<double>(xs.size());
}

double full_data_score(const Dataset& d, const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> all(d.num_rows());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    SplitPlan trivial{all, all, 0};
    return score_subset(d, trivial, subset, FloorScope::Full);
}

} // namespace

std::vector<TripleRecord> scan_triples(const Dataset& d, const ScanOptions& opts) {
    const std::size_t k = d.num_features();
    if (k < 3)
        throw UsageError("scan_triples: need at least 3 features");
    if (opts.seeds.size() < 2)
        throw UsageError("scan_triples: need at least 2 seeds");

    // Phase 1: CV samples for all singletons and pairs.
    std::vector<std::vector<std::size_t>> base_subsets;
    for (std::size_t f = 0; f < k; ++f)
        base_subsets.push_back({f});
    std::vector<std::size_t> pair_slot(k * k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            pair_slot[a * k + b] = base_subsets.size();
            base_subsets.push_back({a, b});
        }

    std::vector<ScoreSample> base_samples(base_subsets.size());
    parallel_for(base_subsets.size(), opts.workers, [&](std::size_t i) {
        base_samples[i] =
            cv_scores(d, base_subsets[i], opts.seeds, opts.train_fraction, opts.floor_scope);
    });

    // Phase 2: complementary pairs.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double t1, t2, t12;
            if (opts.pair_policy == PairPolicy::CvMean) {
                t1 = mean_of(base_samples[a].scores);
                t2 = mean_of(base_samples[b].scores);
                t12 = mean_of(base_samples[pair_slot[a * k + b]].scores);
            } else {
                t1 = full_data_score(d, {a});
                t2 = full_data_score(d, {b});
                t12 = full_data_score(d, {a, b});
            }
            if (is_complementary(t1, t2, t12))
                pairs.emplace_back(a, b);
        }
    }

    // Phase 3: CV samples for every candidate triple, significance by CI
    // disjointness against the pair's CI.
    struct Candidate {
        std::size_t f1, f2, s;
    };
    std::vector<Candidate> candidates;
    for (const auto& [a, b] : pairs)
        for (std::size_t s = 0; s < k; ++s)
            if (s != a && s != b)
                candidates.push_back({a, b, s});

    std::vector<std::optional<TripleRecord>> results(candidates.size());
    parallel_for(candidates.size(), opts.workers, [&](std::size_t i) {
        const Candidate& c = candidates[i];
        ScoreSample triple;
        try {
            triple = cv_scores(d, {c.f1, c.f2, c.s}, opts.seeds, opts.train_fraction,
                               opts.floor_scope);
        } catch (const DataError& e) {
            std::ostringstream os;
            os << "triple (" << d.feature_names()[c.f1] << ", " << d.feature_names()[c.f2]
               << ", " << d.feature_names()[c.s] << "): " << e.what();
            throw DataError(os.str());
        }
        MeanCI ci_inter = mean_ci(triple.scores, opts.alpha);
        MeanCI ci_elim = mean_ci(base_samples[pair_slot[c.f1 * k + c.f2]].scores, opts.alpha);
        if (!(ci_elim.lo > ci_inter.hi))
            return;

        TripleRecord rec;
        rec.f1 = c.f1;
        rec.f2 = c.f2;
        rec.s = c.s;
        rec.ci_inter = ci_inter;
        rec.ci_elim = ci_elim;
        if (auto bounds = s_cv_bounds(ci_elim, ci_inter)) {
            rec.s_cv_min = bounds->s_min;
            rec.s_cv_max = bounds->s_max;
            rec.s_cv = bounds->s_cv;
        } else {
            rec.flagged = true;
            rec.s_cv_min = rec.s_cv_max = rec.s_cv = std::nan("");
        }
        results[i] = rec;
    });

    std::vector<TripleRecord> records;
    for (const auto& r : results) // candidate order is already (f1, f2, s)-sorted
        if (r)
            records.push_back(*r);
    return records;
}

} // namespace interf
