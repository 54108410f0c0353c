#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <specbid/csv.hpp>
#include <specbid/scenario.hpp>

using namespace specbid;

namespace {

ScenarioConfig tiny_compare_config() {
    ScenarioConfig cfg;
    cfg.num_sus = 2;
    cfg.num_channels = 1;
    cfg.horizon = 60;
    cfg.entry_fee = 10.0;
    cfg.monitor_fee = 1.0;
    cfg.compare = {Policy::Threshold, Policy::Myopic};
    cfg.replications = 3;
    cfg.seed = 11;
    return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

bool cell_is_g9_stable(const std::string& cell) {
    return format_g9(std::strtod(cell.c_str(), nullptr)) == cell;
}

}  // namespace

TEST_CASE("sweep grid expands fee and population lists in a fixed order") {
    ScenarioConfig cfg = tiny_compare_config();
    CHECK(sweep_points(cfg) ==
          std::vector<SweepPoint>{SweepPoint{2, 10.0, 1.0}});

    cfg.sweep_entry_fee = {1.0, 2.0, 3.0};
    cfg.sweep_monitor_fee = {1.0, 5.0};
    const auto pts = sweep_points(cfg);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0] == SweepPoint{2, 1.0, 1.0});
    CHECK(pts[1] == SweepPoint{2, 2.0, 1.0});
    CHECK(pts[2] == SweepPoint{2, 3.0, 1.0});
    CHECK(pts[3] == SweepPoint{2, 1.0, 5.0});
    CHECK(pts[5] == SweepPoint{2, 3.0, 5.0});

    ScenarioConfig n = tiny_compare_config();
    n.compare.clear();
    n.strategy = {Policy::Threshold};
    n.sweep_num_sus = {2, 4};
    const auto npts = sweep_points(n);
    REQUIRE(npts.size() == 2);
    CHECK(npts[0].num_sus == 2);
    CHECK(npts[1].num_sus == 4);
}

TEST_CASE("a compare run produces one scheme per tag with full replication sets") {
    const ScenarioConfig cfg = tiny_compare_config();
    const ScenarioOutcome o = run_scenario(cfg);
    CHECK(o.schemes == std::vector<std::string>{"threshold", "myopic"});
    REQUIRE(o.points.size() == 1);
    REQUIRE(o.results.size() == 2);
    for (std::size_t vi = 0; vi < 2; ++vi) {
        const SchemeResult& r = o.at(0, vi);
        REQUIRE(r.reps.size() == 3);
        for (const RepOutcome& rep : r.reps) {
            REQUIRE(rep.final_gamma.size() == 2);
            for (double g : rep.final_gamma) CHECK(g > 0.0);
            CHECK(rep.final_jain >= 0.5 - 1e-12);
            CHECK(rep.final_jain <= 1.0 + 1e-12);
        }
        CHECK(r.trace.slots() == 60);
        CHECK(r.trace.num_sus == 2);
    }
    CHECK(gain_vs_myopic(o, 0, 1) == std::nullopt);
    const auto gain = gain_vs_myopic(o, 0, 0);
    REQUIRE(gain.has_value());
    const double t = o.at(0, 0).mean_final_gamma();
    const double m = o.at(0, 1).mean_final_gamma();
    CHECK(*gain == Catch::Approx(100.0 * (t - m) / m));
}

TEST_CASE("without a compare list the configured mix runs as one scheme") {
    ScenarioConfig cfg = tiny_compare_config();
    cfg.compare.clear();
    cfg.strategy = {Policy::Bcb};
    const ScenarioOutcome uniform = run_scenario(cfg);
    CHECK(uniform.schemes == std::vector<std::string>{"bcb"});
    CHECK(gain_vs_myopic(uniform, 0, 0) == std::nullopt);

    cfg.strategy = {Policy::Bcb, Policy::Myopic};
    const ScenarioOutcome mixed = run_scenario(cfg);
    CHECK(mixed.schemes == std::vector<std::string>{"mixed"});
}

TEST_CASE("the trace is kept only for the first sweep point") {
    ScenarioConfig cfg = tiny_compare_config();
    cfg.sweep_entry_fee = {1.0, 10.0};
    const ScenarioOutcome o = run_scenario(cfg);
    REQUIRE(o.points.size() == 2);
    CHECK(o.at(0, 0).trace.slots() == 60);
    CHECK(o.at(1, 0).trace.slots() == 0);
}

TEST_CASE("rendered CSVs have the documented shape") {
    const ScenarioConfig cfg = tiny_compare_config();
    const ScenarioOutcome o = run_scenario(cfg);

    const auto summary = lines_of(render_summary_csv(o));
    REQUIRE(summary.size() == 1 + 2);
    CHECK(summary[0] ==
          "scheme,num_sus,num_channels,entry_fee,monitor_fee,replications,"
          "mean_final_gamma,stddev_final_gamma,mean_final_jain,gain_vs_myopic_pct");
    const auto row = split_csv_row(summary[1]);
    REQUIRE(row.size() == 10);
    CHECK(row[0] == "threshold");
    CHECK(row[1] == "2");
    CHECK(row[2] == "1");
    CHECK(row[5] == "3");
    const auto myopic_row = split_csv_row(summary[2]);
    CHECK(myopic_row[0] == "myopic");
    CHECK(myopic_row[9].empty());

    const auto series = lines_of(render_timeseries_csv(o.at(0, 0).trace));
    REQUIRE(series.size() == 1 + 60 * 2);
    CHECK(series[0] == "slot,su_id,gamma,bid,action,payment,jain_F");
    const auto first = split_csv_row(series[1]);
    REQUIRE(first.size() == 7);
    CHECK(first[0] == "0");
    CHECK(first[1] == "0");
    CHECK((first[4] == "bid" || first[4] == "so"));
}

TEST_CASE("numeric CSV cells are fixed points of the output format") {
    const ScenarioConfig cfg = tiny_compare_config();
    const ScenarioOutcome o = run_scenario(cfg);

    const auto summary = lines_of(render_summary_csv(o));
    for (std::size_t r = 1; r < summary.size(); ++r) {
        const auto cells = split_csv_row(summary[r]);
        for (std::size_t c : {3u, 4u, 6u, 7u, 8u}) CHECK(cell_is_g9_stable(cells[c]));
        if (!cells[9].empty()) CHECK(cell_is_g9_stable(cells[9]));
    }

    const auto series = lines_of(render_timeseries_csv(o.at(0, 1).trace));
    for (std::size_t r = 1; r < series.size(); ++r) {
        const auto cells = split_csv_row(series[r]);
        for (std::size_t c : {2u, 3u, 5u, 6u}) CHECK(cell_is_g9_stable(cells[c]));
    }
}

TEST_CASE("scenario outputs do not depend on the thread count") {
    ScenarioConfig cfg = tiny_compare_config();
    cfg.sweep_entry_fee = {2.0, 10.0};
    const ScenarioOutcome one = run_scenario(cfg, 1);
    const ScenarioOutcome again = run_scenario(cfg, 1);
    const ScenarioOutcome four = run_scenario(cfg, 4);

    CHECK(render_summary_csv(one) == render_summary_csv(again));
    CHECK(render_summary_csv(one) == render_summary_csv(four));
    for (std::size_t vi = 0; vi < one.schemes.size(); ++vi)
        CHECK(render_timeseries_csv(one.at(0, vi).trace) ==
              render_timeseries_csv(four.at(0, vi).trace));
}

TEST_CASE("write_outputs emits a summary plus one timeseries per scheme") {
    const ScenarioConfig cfg = tiny_compare_config();
    const ScenarioOutcome o = run_scenario(cfg);
    MemorySink sink;
    write_outputs(o, sink);
    REQUIRE(sink.files.size() == 3);
    CHECK(sink.files.count("summary.csv") == 1);
    CHECK(sink.files.count("timeseries_threshold.csv") == 1);
    CHECK(sink.files.count("timeseries_myopic.csv") == 1);
}

TEST_CASE("zero replications still produce valid header-only CSVs") {
    ScenarioConfig cfg = tiny_compare_config();
    cfg.replications = 0;
    const ScenarioOutcome o = run_scenario(cfg);
    MemorySink sink;
    write_outputs(o, sink);
    CHECK(lines_of(sink.files.at("summary.csv")).size() == 1);
    CHECK(lines_of(sink.files.at("timeseries_threshold.csv")).size() == 1);
}

TEST_CASE("directory sink writes real files and reports unusable paths") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "specbid_test_out";
    fs::remove_all(dir);

    const ScenarioConfig cfg = tiny_compare_config();
    const ScenarioOutcome o = run_scenario(cfg);
    DirectorySink sink(dir / "nested");
    write_outputs(o, sink);
    REQUIRE(fs::exists(dir / "nested" / "summary.csv"));

    std::ifstream in(dir / "nested" / "summary.csv", std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == render_summary_csv(o));

    const fs::path file = dir / "plain_file";
    std::ofstream(file) << "x";
    CHECK_THROWS_AS(DirectorySink(file / "sub"), IoError);
    fs::remove_all(dir);
}
