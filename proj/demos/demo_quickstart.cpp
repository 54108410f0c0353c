// Minimal library walkthrough: configure a two-bidder scenario in code, run
// the learning and myopic schemes against identical channel draws, and print
// the same summary the CLI writes to summary.csv.
#include <cstdio>

#include <specbid/specbid.hpp>

int main() {
    specbid::ScenarioConfig cfg;
    cfg.num_sus = 2;
    cfg.num_channels = 1;
    cfg.horizon = 2000;
    cfg.entry_fee = 10.0;
    cfg.monitor_fee = 1.0;
    cfg.compare = {specbid::Policy::Threshold, specbid::Policy::Myopic};
    cfg.replications = 5;
    cfg.seed = 2026;

    const specbid::ScenarioOutcome outcome = specbid::run_scenario(cfg, 2);
    for (std::size_t vi = 0; vi < outcome.schemes.size(); ++vi) {
        const specbid::SchemeResult& r = outcome.at(0, vi);
        std::printf("%-10s mean final utility %.4f, fairness %.4f\n",
                    r.scheme.c_str(), r.mean_final_gamma(), r.mean_final_jain());
    }
    if (const auto gain = specbid::gain_vs_myopic(outcome, 0, 0))
        std::printf("gain over myopic: %.1f%%\n", *gain);

    std::puts("\nsummary.csv:");
    std::fputs(specbid::render_summary_csv(outcome).c_str(), stdout);
    return 0;
}
