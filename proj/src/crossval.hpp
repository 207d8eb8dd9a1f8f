#pragma once

#include "dataset.hpp"
#include "scoring.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace interf {

/// Per-seed test scores for one feature subset. Scores are stored in seed
/// order so that samples for different subsets are paired split-for-split.
struct ScoreSample {
    std::vector<std::size_t> subset;
    std::vector<double> scores;
};

struct MeanCI {
    double lo = 0;
    double hi = 0;
    double mean = 0;
};

struct SCvBounds {
    double s_min = 0;
    double s_max = 0;
    double s_cv = 0;
};

struct TripleRecord {
    std::size_t f1 = 0, f2 = 0, s = 0;
    MeanCI ci_inter; // pair + interfering feature
    MeanCI ci_elim;  // pair alone
    double s_cv_min = 0, s_cv_max = 0, s_cv = 0;
    bool flagged = false; // non-positive denominator; no coefficient
};

/// How pair complementarity is decided during a scan.
enum class PairPolicy {
    CvMean,  // mean CV test scores
    FullData // training score of a tree fit on all rows
};

struct ScanOptions {
    std::vector<std::uint64_t> seeds;
    double train_fraction = 0.7;
    double alpha = 0.05;
    FloorScope floor_scope = FloorScope::Train;
    PairPolicy pair_policy = PairPolicy::CvMean;
    unsigned workers = 1;
};

/// seeds r_j = base + j for j = 1..count.
std::vector<std::uint64_t> seed_sequence(std::uint64_t base, std::size_t count);

/// One score per seed; every subset evaluated with the same seed list sees
/// identical splits (splits depend only on seed, N and fraction).
ScoreSample cv_scores(const Dataset& d,
                      const std::vector<std::size_t>& subset,
                      const std::vector<std::uint64_t>& seeds,
                      double train_fraction,
                      FloorScope floor_scope = FloorScope::Train);

/// Two-sided Student-t confidence interval for the mean.
MeanCI mean_ci(const std::vector<double>& scores, double alpha);

/// Cross-validated coefficient bounds from the two CIs; nullopt when
/// ci_inter.lo <= 0 (the record is flagged instead).
std::optional<SCvBounds> s_cv_bounds(const MeanCI& ci_elim, const MeanCI& ci_inter);

/// Full scan: CV-score every singleton and pair, find complementary pairs,
/// then test every third feature for significant interference
/// (ci_elim.lo > ci_inter.hi). Records come back sorted by (f1, f2, s) and
/// are identical for any worker count.
std::vector<TripleRecord> scan_triples(const Dataset& d, const ScanOptions& opts);

} // namespace interf
