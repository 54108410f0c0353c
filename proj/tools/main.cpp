#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <specbid/specbid.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw specbid::IoError("cannot open config", path);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw specbid::IoError("read failed", path);
    return ss.str();
}

specbid::ScenarioConfig load_config(const std::string& path, const std::string& preset) {
    const std::string text = read_file(path);
    if (preset.empty()) return specbid::parse_config(text);
    const specbid::ScenarioConfig base = specbid::preset_config(preset);
    return specbid::parse_config(text, &base);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repeated spectrum auction simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::uint32_t replications = 0;
    unsigned threads = 1;

    CLI::App* run_cmd = app.add_subcommand("run", "simulate and write CSV outputs");
    run_cmd->add_option("--config", config_path, "config file (key = value lines)")->required();
    run_cmd->add_option("--preset", preset, "base scenario the config file overrides");
    CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "override the master seed");
    CLI::Option* reps_opt =
        run_cmd->add_option("--replications", replications, "override the replication count");
    run_cmd->add_option("--out", out_dir, "output directory (default: out)");
    run_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "check a config and print its resolved form");
    validate_cmd->add_option("--config", config_path, "config file (key = value lines)")
        ->required();
    validate_cmd->add_option("--preset", preset, "base scenario the config file overrides");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        specbid::ScenarioConfig cfg = load_config(config_path, preset);
        if (seed_opt->count() > 0) cfg.seed = seed;
        if (reps_opt->count() > 0) cfg.replications = replications;
        cfg.validate();

        if (validate_cmd->parsed()) {
            std::fputs(specbid::serialize_config(cfg).c_str(), stdout);
            return 0;
        }

        const specbid::ScenarioOutcome outcome = specbid::run_scenario(cfg, threads);
        specbid::DirectorySink sink{out_dir};
        specbid::write_outputs(outcome, sink);
        std::printf("wrote %s/summary.csv\n", out_dir.c_str());
        for (const std::string& scheme : outcome.schemes)
            std::printf("wrote %s/timeseries_%s.csv\n", out_dir.c_str(), scheme.c_str());
        return 0;
    } catch (const specbid::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const specbid::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    }
}
