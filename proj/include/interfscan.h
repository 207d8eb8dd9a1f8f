/* C API for the feature-interference analysis library.
 *
 * All functions return ifs_status; out parameters are only valid on IFS_OK.
 * On failure, ifs_last_error() returns a thread-local message describing
 * what went wrong. Handles are opaque and must be released with the
 * matching *_free function.
 */
#ifndef INTERFSCAN_H
#define INTERFSCAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ifs_status {
    IFS_OK = 0,
    IFS_ERR_USAGE = 2, /* bad arguments or configuration */
    IFS_ERR_DATA = 3,  /* unusable data (parse failures, degenerate targets) */
    IFS_ERR_IO = 4     /* file system failures */
} ifs_status;

typedef enum ifs_task { IFS_REGRESSION = 0, IFS_CLASSIFICATION = 1 } ifs_task;
typedef enum ifs_format { IFS_FORMAT_CSV = 0, IFS_FORMAT_JSON = 1 } ifs_format;

typedef struct ifs_dataset ifs_dataset;
typedef struct ifs_scan ifs_scan;

/* Last error message for the calling thread; empty string if none. */
const char* ifs_last_error(void);

/* ---- datasets ---- */

ifs_status ifs_dataset_load_csv(const char* path, const char* target_name, ifs_task task,
                                ifs_dataset** out);
ifs_status ifs_dataset_synthetic(ifs_dataset** out);
ifs_status ifs_dataset_write_csv(const ifs_dataset* d, const char* path);
/* Keep rows with lo <= value < hi on the named feature. */
ifs_status ifs_dataset_filter(const ifs_dataset* d, const char* feature, double lo,
                              double hi, ifs_dataset** out);
size_t ifs_dataset_rows(const ifs_dataset* d);
size_t ifs_dataset_features(const ifs_dataset* d);
/* Pointer owned by the dataset; NULL when index is out of range. */
const char* ifs_dataset_feature_name(const ifs_dataset* d, size_t index);
void ifs_dataset_free(ifs_dataset* d);

/* ---- single-tree fit (no cross-validation) ---- */

/* Fits a depth-2 tree on the full dataset restricted to the named features.
 * text_out receives the rendered tree (release with ifs_string_free);
 * score_out receives the training score. Either out pointer may be NULL. */
ifs_status ifs_fit(const ifs_dataset* d, const char* const* feature_names, size_t n_features,
                   char** text_out, double* score_out);
void ifs_string_free(char* s);

/* ---- interference scan ---- */

typedef struct ifs_scan_config {
    int splits;            /* R, number of seeded train/test repetitions (>= 2) */
    uint64_t seed_base;    /* seeds are seed_base + 1 .. seed_base + R */
    double train_fraction; /* in (0, 1) */
    double alpha;          /* CI significance level, in (0, 1) */
    int workers;           /* worker threads; <= 1 means serial */
    int floor_full;        /* nonzero: accuracy floor from the full dataset,
                              not the training part */
    int pair_full_data;    /* nonzero: decide pair complementarity from
                              full-data training scores instead of CV means */
} ifs_scan_config;

/* Defaults: splits=1000, seed_base=0, train_fraction=0.7, alpha=0.05,
 * workers=1, floor_full=0, pair_full_data=0. */
void ifs_scan_config_init(ifs_scan_config* cfg);

typedef struct ifs_triple {
    const char* f1; /* owned by the scan handle */
    const char* f2;
    const char* s;
    double s_cv, s_cv_min, s_cv_max; /* NaN when flagged */
    double t_inter_mean, t_inter_lo, t_inter_hi;
    double t_elim_mean, t_elim_lo, t_elim_hi;
    int flagged;
} ifs_triple;

ifs_status ifs_scan_run(const ifs_dataset* d, const ifs_scan_config* cfg, ifs_scan** out);
ifs_status ifs_scan_load(const char* report_path, ifs_scan** out);
size_t ifs_scan_count(const ifs_scan* scan);
ifs_status ifs_scan_triple(const ifs_scan* scan, size_t index, ifs_triple* out);
ifs_status ifs_scan_write(const ifs_scan* scan, const char* path, ifs_format format);
void ifs_scan_free(ifs_scan* scan);

/* ---- dataset summaries ---- */

typedef struct ifs_summary {
    size_t triple_count;
    double s_min, s_median, s_max;
    double t_median;
    int has_correlation; /* zero when fewer than 3 usable triples */
    double rho, p_value; /* valid only when has_correlation */
} ifs_summary;

/* Aggregates the records of one or more scans (pooled when n > 1). */
ifs_status ifs_summarize(const ifs_scan* const* scans, size_t n, ifs_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* INTERFSCAN_H */
