#include "report.hpp"
#include "errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace interf {

namespace {

const char* kCsvHeader =
    "index,f1,f2,s,S_cv,S_cv_min,S_cv_max,t_inter_mean,t_inter_lo,t_inter_hi,"
    "t_elim_mean,t_elim_lo,t_elim_hi,flagged";

std::string sig6(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::vector<NamedTriple> resolve_names(const std::vector<TripleRecord>& records,
                                       const Dataset& d) {
    std::vector<NamedTriple> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        NamedTriple row;
        row.f1 = d.feature_names()[r.f1];
        row.f2 = d.feature_names()[r.f2];
        row.s = d.feature_names()[r.s];
        row.ci_inter = r.ci_inter;
        row.ci_elim = r.ci_elim;
        row.s_cv_min = r.s_cv_min;
        row.s_cv_max = r.s_cv_max;
        row.s_cv = r.s_cv;
        row.flagged = r.flagged;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TripleRecord> to_records(const std::vector<NamedTriple>& rows) {
    std::vector<TripleRecord> records;
    records.reserve(rows.size());
    for (const auto& row : rows) {
        TripleRecord r;
        r.ci_inter = row.ci_inter;
        r.ci_elim = row.ci_elim;
        r.s_cv_min = row.s_cv_min;
        r.s_cv_max = row.s_cv_max;
        r.s_cv = row.s_cv;
        r.flagged = row.flagged;
        records.push_back(r);
    }
    return records;
}

namespace {

void write_csv_report(std::ostream& out, const std::vector<NamedTriple>& rows) {
    out << kCsvHeader << '\n';
    std::size_t index = 1;
    for (const auto& r : rows) {
        out << index++ << ',' << r.f1 << ',' << r.f2 << ',' << r.s << ',' << sig6(r.s_cv)
            << ',' << sig6(r.s_cv_min) << ',' << sig6(r.s_cv_max) << ','
            << sig6(r.ci_inter.mean) << ',' << sig6(r.ci_inter.lo) << ','
            << sig6(r.ci_inter.hi) << ',' << sig6(r.ci_elim.mean) << ','
            << sig6(r.ci_elim.lo) << ',' << sig6(r.ci_elim.hi) << ','
            << (r.flagged ? 1 : 0) << '\n';
    }
}

nlohmann::json triple_to_json(const NamedTriple& r) {
    nlohmann::json j{
        {"f1", r.f1},
        {"f2", r.f2},
        {"s", r.s},
        {"t_inter", {{"lo", r.ci_inter.lo}, {"hi", r.ci_inter.hi}, {"mean", r.ci_inter.mean}}},
        {"t_elim", {{"lo", r.ci_elim.lo}, {"hi", r.ci_elim.hi}, {"mean", r.ci_elim.mean}}},
        {"flagged", r.flagged},
    };
    if (!r.flagged) {
        j["S_cv"] = r.s_cv;
        j["S_cv_min"] = r.s_cv_min;
        j["S_cv_max"] = r.s_cv_max;
    }
    return j;
}

} // namespace

void write_report(const std::string& path, const std::vector<NamedTriple>& rows,
                  ReportFormat format) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    if (format == ReportFormat::Csv) {
        write_csv_report(out, rows);
    } else {
        nlohmann::json j;
        j["triples"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["triples"].push_back(triple_to_json(r));
        out << j.dump(2) << '\n';
    }
    if (!out)
        throw IoError("write failed: " + path);
}

namespace {

std::vector<std::string> split_cells(const std::string& line) {
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

double num(const std::string& s, const std::string& path) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str())
        throw DataError("malformed report cell '" + s + "' in " + path);
    return v;
}

std::vector<NamedTriple> read_csv_report(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line) || split_cells(line).size() != 14)
        throw DataError("malformed report header in " + path);

    std::vector<NamedTriple> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto c = split_cells(line);
        if (c.size() != 14)
            throw DataError("malformed report row in " + path);
        NamedTriple r;
        r.f1 = c[1];
        r.f2 = c[2];
        r.s = c[3];
        r.s_cv = num(c[4], path);
        r.s_cv_min = num(c[5], path);
        r.s_cv_max = num(c[6], path);
        r.ci_inter = MeanCI{num(c[8], path), num(c[9], path), num(c[7], path)};
        r.ci_elim = MeanCI{num(c[11], path), num(c[12], path), num(c[10], path)};
        r.flagged = num(c[13], path) != 0.0;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<NamedTriple> read_json_report(std::istream& in, const std::string& path) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("malformed JSON report " + path + ": " + e.what());
    }
    if (!j.contains("triples") || !j["triples"].is_array())
        throw DataError("report " + path + " has no 'triples' array");

    std::vector<NamedTriple> rows;
    for (const auto& t : j["triples"]) {
        NamedTriple r;
        r.f1 = t.at("f1").get<std::string>();
        r.f2 = t.at("f2").get<std::string>();
        r.s = t.at("s").get<std::string>();
        r.ci_inter = MeanCI{t.at("t_inter").at("lo"), t.at("t_inter").at("hi"),
                            t.at("t_inter").at("mean")};
        r.ci_elim = MeanCI{t.at("t_elim").at("lo"), t.at("t_elim").at("hi"),
                           t.at("t_elim").at("mean")};
        r.flagged = t.at("flagged").get<bool>();
        if (r.flagged) {
            r.s_cv = r.s_cv_min = r.s_cv_max = std::nan("");
        } else {
            r.s_cv = t.at("S_cv").get<double>();
            r.s_cv_min = t.at("S_cv_min").get<double>();
            r.s_cv_max = t.at("S_cv_max").get<double>();
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

std::vector<NamedTriple> read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open report: " + path);
    int first = in.peek();
    if (first == '{' || first == '[')
        return read_json_report(in, path);
    return read_csv_report(in, path);
}

std::string render_summary_header() {
    return "dataset,Q,S_min,S_median,S_max,t_median,rho,p_value";
}

std::string render_summary_row(const std::string& label, const DatasetSummary& s) {
    std::ostringstream os;
    os << label << ',' << s.triple_count << ',' << sig6(s.s_min) << ',' << sig6(s.s_median)
       << ',' << sig6(s.s_max) << ',' << sig6(s.t_median) << ',';
    if (s.correlation)
        os << sig6(s.correlation->rho) << ',' << sig6(s.correlation->p_value);
    else
        os << "--,--";
    return os.str();
}

} // namespace interf
