#pragma once

#include "crossval.hpp"
#include "stats.hpp"

#include <string>
#include <vector>

namespace interf {

enum class ReportFormat { Csv, Json };

/// A scan record with feature names resolved, as stored in report files.
struct NamedTriple {
    std::string f1, f2, s;
    MeanCI ci_inter;
    MeanCI ci_elim;
    double s_cv_min = 0, s_cv_max = 0, s_cv = 0;
    bool flagged = false;
};

std::vector<NamedTriple> resolve_names(const std::vector<TripleRecord>& records,
                                       const Dataset& d);

/// Summaries only need the CI means and coefficients, so named rows convert
/// back to records with placeholder indices.
std::vector<TripleRecord> to_records(const std::vector<NamedTriple>& rows);

/// CSV carries 6 significant digits; JSON carries full precision.
void write_report(const std::string& path, const std::vector<NamedTriple>& rows,
                  ReportFormat format);

/// Reads either format (sniffed from the first byte).
std::vector<NamedTriple> read_report(const std::string& path);

/// One summary table line; `label` identifies the source report.
std::string render_summary_row(const std::string& label, const DatasetSummary& s);
std::string render_summary_header();

} // namespace interf
