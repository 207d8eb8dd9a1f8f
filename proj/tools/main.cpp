// Command-line front end for the interference scanner. Talks to the core
// library exclusively through the C API.

#include <interfscan.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct DatasetDeleter {
    void operator()(ifs_dataset* d) const { ifs_dataset_free(d); }
};
struct ScanDeleter {
    void operator()(ifs_scan* s) const { ifs_scan_free(s); }
};
using DatasetPtr = std::unique_ptr<ifs_dataset, DatasetDeleter>;
using ScanPtr = std::unique_ptr<ifs_scan, ScanDeleter>;

[[noreturn]] void die(ifs_status st) {
    std::fprintf(stderr, "error: %s\n", ifs_last_error());
    std::exit(static_cast<int>(st));
}

void check(ifs_status st) {
    if (st != IFS_OK)
        die(st);
}

struct InputOptions {
    std::string input;
    std::string target = "target";
    std::string task = "regression";
    bool synthetic = false;
    std::string filter; // FEATURE:LO:HI
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.input, "input CSV path");
    cmd->add_option("--target", in.target, "target column name");
    cmd->add_option("--task", in.task, "task kind")
        ->check(CLI::IsMember({"regression", "classification"}));
    cmd->add_flag("--synthetic", in.synthetic, "use the built-in synthetic dataset");
    cmd->add_option("--filter", in.filter,
                    "keep rows with LO <= FEATURE < HI, as FEATURE:LO:HI");
}

DatasetPtr open_dataset(const InputOptions& in) {
    ifs_dataset* raw = nullptr;
    if (in.synthetic) {
        check(ifs_dataset_synthetic(&raw));
    } else {
        if (in.input.empty()) {
            std::fprintf(stderr, "error: --input or --synthetic is required\n");
            std::exit(static_cast<int>(IFS_ERR_USAGE));
        }
        ifs_task task = in.task == "classification" ? IFS_CLASSIFICATION : IFS_REGRESSION;
        check(ifs_dataset_load_csv(in.input.c_str(), in.target.c_str(), task, &raw));
    }
    DatasetPtr d(raw);

    if (!in.filter.empty()) {
        auto first = in.filter.find(':');
        auto second = first == std::string::npos ? first : in.filter.find(':', first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            std::fprintf(stderr, "error: --filter expects FEATURE:LO:HI\n");
            std::exit(static_cast<int>(IFS_ERR_USAGE));
        }
        std::string feature = in.filter.substr(0, first);
        double lo = std::stod(in.filter.substr(first + 1, second - first - 1));
        double hi = std::stod(in.filter.substr(second + 1));
        ifs_dataset* filtered = nullptr;
        check(ifs_dataset_filter(d.get(), feature.c_str(), lo, hi, &filtered));
        d.reset(filtered);
    }
    return d;
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

void print_summary_line(const std::string& label, const ifs_summary& s, std::FILE* out) {
    std::fprintf(out, "%s,%zu,%.6g,%.6g,%.6g,%.6g,", label.c_str(), s.triple_count, s.s_min,
                 s.s_median, s.s_max, s.t_median);
    if (s.has_correlation)
        std::fprintf(out, "%.6g,%.6g\n", s.rho, s.p_value);
    else
        std::fprintf(out, "--,--\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complementary-feature interference analysis"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "write the built-in synthetic dataset");
    std::string synth_out;
    synth->add_option("--out", synth_out, "output CSV path")->required();

    // fit
    auto* fit = app.add_subcommand("fit", "fit a two-tier tree on the full dataset");
    InputOptions fit_in;
    add_input_flags(fit, fit_in);
    std::vector<std::string> fit_features;
    fit->add_option("--features", fit_features, "feature names to fit on")
        ->required()
        ->delimiter(',');

    // scan
    auto* scan = app.add_subcommand("scan", "run the full interference scan");
    InputOptions scan_in;
    add_input_flags(scan, scan_in);
    ifs_scan_config cfg;
    ifs_scan_config_init(&cfg);
    std::string scan_out, scan_format = "csv", floor_scope = "train",
                pair_policy = "cv-mean";
    scan->add_option("--splits", cfg.splits, "number of seeded train/test repetitions")
        ->check(CLI::Range(2, 1000000));
    scan->add_option("--seed-base", cfg.seed_base, "seed base (seeds are base+1..base+R)");
    scan->add_option("--train-fraction", cfg.train_fraction, "training fraction")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    scan->add_option("--alpha", cfg.alpha, "CI significance level")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    scan->add_option("--workers", cfg.workers, "worker threads");
    scan->add_option("--out", scan_out, "report output path")->required();
    scan->add_option("--format", scan_format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--floor-scope", floor_scope,
                     "classification accuracy floor from train or full data")
        ->check(CLI::IsMember({"train", "full"}));
    scan->add_option("--pair-policy", pair_policy, "pair complementarity policy")
        ->check(CLI::IsMember({"cv-mean", "full-data"}));

    // summarize
    auto* summ = app.add_subcommand("summarize", "aggregate one or more scan reports");
    std::vector<std::string> report_paths;
    std::string summ_out;
    summ->add_option("reports", report_paths, "scan report files")->required();
    summ->add_option("--out", summ_out, "also write the summary table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(IFS_ERR_USAGE);
    }

    if (synth->parsed()) {
        ifs_dataset* d = nullptr;
        check(ifs_dataset_synthetic(&d));
        DatasetPtr guard(d);
        check(ifs_dataset_write_csv(d, synth_out.c_str()));
        std::printf("wrote %s (%zu rows, %zu features)\n", synth_out.c_str(),
                    ifs_dataset_rows(d), ifs_dataset_features(d));
        return 0;
    }

    if (fit->parsed()) {
        DatasetPtr d = open_dataset(fit_in);
        std::vector<const char*> names;
        names.reserve(fit_features.size());
        for (const auto& f : fit_features)
            names.push_back(f.c_str());
        char* text = nullptr;
        double score = 0;
        check(ifs_fit(d.get(), names.data(), names.size(), &text, &score));
        std::printf("%s", text);
        std::printf("training score: %.6g\n", score);
        ifs_string_free(text);
        return 0;
    }

    if (scan->parsed()) {
        DatasetPtr d = open_dataset(scan_in);
        cfg.floor_full = floor_scope == "full" ? 1 : 0;
        cfg.pair_full_data = pair_policy == "full-data" ? 1 : 0;
        ifs_scan* result = nullptr;
        check(ifs_scan_run(d.get(), &cfg, &result));
        ScanPtr guard(result);
        check(ifs_scan_write(result, scan_out.c_str(),
                             scan_format == "json" ? IFS_FORMAT_JSON : IFS_FORMAT_CSV));
        size_t n = ifs_scan_count(result);
        if (n == 0)
            std::printf("0 triples with interference found; report written to %s\n",
                        scan_out.c_str());
        else
            std::printf("%zu triple(s) with interference; report written to %s\n", n,
                        scan_out.c_str());
        return 0;
    }

    // summarize
    std::vector<ScanPtr> scans;
    std::vector<const ifs_scan*> raw;
    for (const auto& path : report_paths) {
        ifs_scan* s = nullptr;
        check(ifs_scan_load(path.c_str(), &s));
        scans.emplace_back(s);
        raw.push_back(s);
    }

    std::printf("dataset,Q,S_min,S_median,S_max,t_median,rho,p_value\n");
    std::FILE* file_out = nullptr;
    if (!summ_out.empty()) {
        file_out = std::fopen(summ_out.c_str(), "w");
        if (!file_out) {
            std::fprintf(stderr, "error: cannot open %s\n", summ_out.c_str());
            return static_cast<int>(IFS_ERR_IO);
        }
        std::fprintf(file_out, "dataset,Q,S_min,S_median,S_max,t_median,rho,p_value\n");
    }
    for (size_t i = 0; i < raw.size(); ++i) {
        ifs_summary s;
        check(ifs_summarize(&raw[i], 1, &s));
        print_summary_line(stem_of(report_paths[i]), s, stdout);
        if (file_out)
            print_summary_line(stem_of(report_paths[i]), s, file_out);
    }
    if (raw.size() > 1) {
        ifs_summary all;
        check(ifs_summarize(raw.data(), raw.size(), &all));
        print_summary_line("ALL", all, stdout);
        if (file_out)
            print_summary_line("ALL", all, file_out);
    }
    if (file_out)
        std::fclose(file_out);
    return 0;
}
