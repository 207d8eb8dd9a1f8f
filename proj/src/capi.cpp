#include "interfscan.h"

#include "crossval.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "scoring.hpp"
#include "stats.hpp"
#include "tree.hpp"

#include <cstring>
#include <string>
#include <vector>

using namespace interf;

struct ifs_dataset {
    Dataset data;
};

struct ifs_scan {
    std::vector<NamedTriple> rows;
};

namespace {

thread_local std::string g_last_error;

ifs_status fail(ifs_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
ifs_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return IFS_OK;
    } catch (const UsageError& e) {
        return fail(IFS_ERR_USAGE, e.what());
    } catch (const DataError& e) {
        return fail(IFS_ERR_DATA, e.what());
    } catch (const IoError& e) {
        return fail(IFS_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(IFS_ERR_DATA, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* ifs_last_error(void) { return g_last_error.c_str(); }

ifs_status ifs_dataset_load_csv(const char* path, const char* target_name, ifs_task task,
                                ifs_dataset** out) {
    if (!path || !target_name || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] {
        Task t = task == IFS_CLASSIFICATION ? Task::Classification : Task::Regression;
        *out = new ifs_dataset{load_csv(path, target_name, t)};
    });
}

ifs_status ifs_dataset_synthetic(ifs_dataset** out) {
    if (!out)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] { *out = new ifs_dataset{emit_synthetic()}; });
}

ifs_status ifs_dataset_write_csv(const ifs_dataset* d, const char* path) {
    if (!d || !path)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] { write_csv(d->data, path); });
}

ifs_status ifs_dataset_filter(const ifs_dataset* d, const char* feature, double lo,
                              double hi, ifs_dataset** out) {
    if (!d || !feature || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] { *out = new ifs_dataset{filter_rows(d->data, feature, lo, hi)}; });
}

size_t ifs_dataset_rows(const ifs_dataset* d) { return d ? d->data.num_rows() : 0; }
size_t ifs_dataset_features(const ifs_dataset* d) { return d ? d->data.num_features() : 0; }

const char* ifs_dataset_feature_name(const ifs_dataset* d, size_t index) {
    if (!d || index >= d->data.num_features())
        return nullptr;
    return d->data.feature_names()[index].c_str();
}

void ifs_dataset_free(ifs_dataset* d) { delete d; }

ifs_status ifs_fit(const ifs_dataset* d, const char* const* feature_names, size_t n_features,
                   char** text_out, double* score_out) {
    if (!d || !feature_names)
        return fail(IFS_ERR_USAGE, "null argument");
    if (n_features == 0)
        return fail(IFS_ERR_USAGE, "empty feature list");
    return guarded([&] {
        std::vector<std::size_t> subset;
        subset.reserve(n_features);
        for (size_t i = 0; i < n_features; ++i)
            subset.push_back(d->data.feature_index(feature_names[i]));

        std::vector<std::size_t> all(d->data.num_rows());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;

        TwoTierTree tree = fit_two_tier(d->data, all, subset);
        if (score_out) {
            SplitPlan trivial{all, all, 0};
            *score_out = score_subset(d->data, trivial, subset, FloorScope::Full);
        }
        if (text_out)
            *text_out = copy_string(tree.render(d->data));
    });
}

void ifs_string_free(char* s) { delete[] s; }

void ifs_scan_config_init(ifs_scan_config* cfg) {
    if (!cfg)
        return;
    cfg->splits = 1000;
    cfg->seed_base = 0;
    cfg->train_fraction = 0.7;
    cfg->alpha = 0.05;
    cfg->workers = 1;
    cfg->floor_full = 0;
    cfg->pair_full_data = 0;
}

ifs_status ifs_scan_run(const ifs_dataset* d, const ifs_scan_config* cfg, ifs_scan** out) {
    if (!d || !cfg || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    if (cfg->splits < 2)
        return fail(IFS_ERR_USAGE, "splits must be >= 2");
    return guarded([&] {
        ScanOptions opts;
        opts.seeds = seed_sequence(cfg->seed_base, static_cast<std::size_t>(cfg->splits));
        opts.train_fraction = cfg->train_fraction;
        opts.alpha = cfg->alpha;
        opts.floor_scope = cfg->floor_full ? FloorScope::Full : FloorScope::Train;
        opts.pair_policy = cfg->pair_full_data ? PairPolicy::FullData : PairPolicy::CvMean;
        opts.workers = cfg->workers <= 1 ? 1u : static_cast<unsigned>(cfg->workers);

        std::vector<TripleRecord> records = scan_triples(d->data, opts);
        *out = new ifs_scan{resolve_names(records, d->data)};
    });
}

ifs_status ifs_scan_load(const char* report_path, ifs_scan** out) {
    if (!report_path || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] { *out = new ifs_scan{read_report(report_path)}; });
}

size_t ifs_scan_count(const ifs_scan* scan) { return scan ? scan->rows.size() : 0; }

ifs_status ifs_scan_triple(const ifs_scan* scan, size_t index, ifs_triple* out) {
    if (!scan || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    if (index >= scan->rows.size())
        return fail(IFS_ERR_USAGE, "triple index out of range");
    const NamedTriple& r = scan->rows[index];
    out->f1 = r.f1.c_str();
    out->f2 = r.f2.c_str();
    out->s = r.s.c_str();
    out->s_cv = r.s_cv;
    out->s_cv_min = r.s_cv_min;
    out->s_cv_max = r.s_cv_max;
    out->t_inter_mean = r.ci_inter.mean;
    out->t_inter_lo = r.ci_inter.lo;
    out->t_inter_hi = r.ci_inter.hi;
    out->t_elim_mean = r.ci_elim.mean;
    out->t_elim_lo = r.ci_elim.lo;
    out->t_elim_hi = r.ci_elim.hi;
    out->flagged = r.flagged ? 1 : 0;
    g_last_error.clear();
    return IFS_OK;
}

ifs_status ifs_scan_write(const ifs_scan* scan, const char* path, ifs_format format) {
    if (!scan || !path)
        return fail(IFS_ERR_USAGE, "null argument");
    return guarded([&] {
        write_report(path, scan->rows,
                     format == IFS_FORMAT_JSON ? ReportFormat::Json : ReportFormat::Csv);
    });
}

void ifs_scan_free(ifs_scan* scan) { delete scan; }

ifs_status ifs_summarize(const ifs_scan* const* scans, size_t n, ifs_summary* out) {
    if (!scans || !out)
        return fail(IFS_ERR_USAGE, "null argument");
    if (n == 0)
        return fail(IFS_ERR_USAGE, "no scans to summarize");
    return guarded([&] {
        std::vector<TripleRecord> pooled;
        for (size_t i = 0; i < n; ++i) {
            if (!scans[i])
                throw UsageError("null scan handle");
            auto records = to_records(scans[i]->rows);
            pooled.insert(pooled.end(), records.begin(), records.end());
        }
        DatasetSummary s = summarize(pooled);
        out->triple_count = s.triple_count;
        out->s_min = s.s_min;
        out->s_median = s.s_median;
        out->s_max = s.s_max;
        out->t_median = s.t_median;
        out->has_correlation = s.correlation ? 1 : 0;
        out->rho = s.correlation ? s.correlation->rho : 0.0;
        out->p_value = s.correlation ? s.correlation->p_value : 0.0;
    });
}

} // extern "C"
