#include "crossval.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "report.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

using namespace interf;

namespace {

std::vector<NamedTriple> sample_rows() {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.01, 0.5);
    std::vector<NamedTriple> rows;
    for (int i = 0; i < 5; ++i) {
        NamedTriple r;
        r.f1 = "a" + std::to_string(i);
        r.f2 = "b" + std::to_string(i);
        r.s = "c" + std::to_string(i);
        double lo = u(rng), w = u(rng);
        r.ci_inter = MeanCI{lo, lo + w, lo + w / 2};
        r.ci_elim = MeanCI{lo + w + 0.1, lo + w + 0.3, lo + w + 0.2};
        auto b = s_cv_bounds(r.ci_elim, r.ci_inter);
        r.s_cv_min = b->s_min;
        r.s_cv_max = b->s_max;
        r.s_cv = b->s_cv;
        rows.push_back(r);
    }
    NamedTriple flagged;
    flagged.f1 = "x";
    flagged.f2 = "y";
    flagged.s = "z";
    flagged.ci_inter = MeanCI{-0.02, 0.05, 0.015};
    flagged.ci_elim = MeanCI{0.2, 0.3, 0.25};
    flagged.flagged = true;
    flagged.s_cv = flagged.s_cv_min = flagged.s_cv_max = std::nan("");
    rows.push_back(flagged);
    return rows;
}

} // namespace

TEST_CASE("json report round trips at full precision") {
    auto rows = sample_rows();
    write_report("t_report.json", rows, ReportFormat::Json);
    auto back = read_report("t_report.json");
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].f1 == rows[i].f1);
        CHECK(back[i].s == rows[i].s);
        CHECK(back[i].flagged == rows[i].flagged);
        CHECK(back[i].ci_inter.mean == rows[i].ci_inter.mean); // bit-exact
        CHECK(back[i].ci_elim.lo == rows[i].ci_elim.lo);
        if (!rows[i].flagged)
            CHECK(back[i].s_cv == rows[i].s_cv);
        else
            CHECK(std::isnan(back[i].s_cv));
    }
    std::remove("t_report.json");
}

TEST_CASE("csv report round trips to 6 significant digits") {
    auto rows = sample_rows();
    write_report("t_report.csv", rows, ReportFormat::Csv);
    auto back = read_report("t_report.csv");
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].f1 == rows[i].f1);
        CHECK(back[i].flagged == rows[i].flagged);
        if (!rows[i].flagged) {
            CHECK(back[i].s_cv == doctest::Approx(rows[i].s_cv).epsilon(1e-5));
            CHECK(back[i].ci_inter.hi == doctest::Approx(rows[i].ci_inter.hi).epsilon(1e-5));
        }
    }
    std::remove("t_report.csv");
}

TEST_CASE("both formats summarize identically") {
    auto rows = sample_rows();
    write_report("t_rep_a.csv", rows, ReportFormat::Csv);
    write_report("t_rep_a.json", rows, ReportFormat::Json);
    DatasetSummary from_csv = summarize(to_records(read_report("t_rep_a.csv")));
    DatasetSummary from_json = summarize(to_records(read_report("t_rep_a.json")));
    CHECK(from_csv.triple_count == from_json.triple_count);
    CHECK(from_csv.s_median == doctest::Approx(from_json.s_median).epsilon(1e-5));
    CHECK(from_csv.t_median == doctest::Approx(from_json.t_median).epsilon(1e-5));
    std::remove("t_rep_a.csv");
    std::remove("t_rep_a.json");
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(read_report("no_such_report.csv"), IoError);
    {
        std::FILE* f = std::fopen("t_bad_report.csv", "w");
        std::fputs("not,a,report\n1,2,3\n", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(read_report("t_bad_report.csv"), DataError);
    std::remove("t_bad_report.csv");
}

TEST_CASE("summary row rendering") {
    DatasetSummary s;
    s.triple_count = 1;
    s.s_min = s.s_median = s.s_max = 24.77;
    s.t_median = 0.0034;
    std::string row = render_summary_row("DIA", s);
    CHECK(row.find("DIA,1,24.77") == 0);
    CHECK(row.find("--,--") != std::string::npos);
}
