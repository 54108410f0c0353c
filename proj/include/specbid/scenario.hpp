#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "specbid/config.hpp"
#include "specbid/csv.hpp"
#include "specbid/engine.hpp"
#include "specbid/errors.hpp"

namespace specbid {

struct SweepPoint {
    std::uint32_t num_sus = 0;
    double entry_fee = 0.0;
    double monitor_fee = 0.0;
    bool operator==(const SweepPoint&) const = default;
};

// Expand the sweep lists into a grid; empty lists contribute the base value.
// Order: num_sus outermost, then monitor_fee, then entry_fee.
inline std::vector<SweepPoint> sweep_points(const ScenarioConfig& cfg) {
    const std::vector<std::uint32_t> ns =
        cfg.sweep_num_sus.empty() ? std::vector<std::uint32_t>{cfg.num_sus} : cfg.sweep_num_sus;
    const std::vector<double> es = cfg.sweep_monitor_fee.empty()
                                       ? std::vector<double>{cfg.monitor_fee}
                                       : cfg.sweep_monitor_fee;
    const std::vector<double> cs = cfg.sweep_entry_fee.empty()
                                       ? std::vector<double>{cfg.entry_fee}
                                       : cfg.sweep_entry_fee;
    std::vector<SweepPoint> out;
    out.reserve(ns.size() * es.size() * cs.size());
    for (std::uint32_t n : ns)
        for (double e : es)
            for (double c : cs) out.push_back(SweepPoint{n, c, e});
    return out;
}

struct RepOutcome {
    std::vector<double> final_gamma;  // per SU
    double final_jain = 1.0;
};

// All replications of one scheme at one sweep point. The full per-slot trace
// is kept only for replication 0 at the first sweep point.
struct SchemeResult {
    std::string scheme;
    SweepPoint point;
    std::vector<RepOutcome> reps;
    MetricsSeries trace;

    double mean_final_gamma() const {
        double sum = 0.0;
        std::size_t n = 0;
        for (const RepOutcome& r : reps)
            for (double g : r.final_gamma) {
                sum += g;
                ++n;
            }
        return n ? sum / static_cast<double>(n) : 0.0;
    }
    double stddev_final_gamma() const {
        const double mean = mean_final_gamma();
        double sq = 0.0;
        std::size_t n = 0;
        for (const RepOutcome& r : reps)
            for (double g : r.final_gamma) {
                sq += (g - mean) * (g - mean);
                ++n;
            }
        return n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) : 0.0;
    }
    double mean_final_jain() const {
        double sum = 0.0;
        for (const RepOutcome& r : reps) sum += r.final_jain;
        return reps.empty() ? 0.0 : sum / static_cast<double>(reps.size());
    }
    double mean_final_gamma_su(std::size_t su) const {
        double sum = 0.0;
        for (const RepOutcome& r : reps) sum += r.final_gamma[su];
        return reps.empty() ? 0.0 : sum / static_cast<double>(reps.size());
    }
};

struct ScenarioOutcome {
    ScenarioConfig base;
    std::vector<SweepPoint> points;
    std::vector<std::string> schemes;
    std::vector<SchemeResult> results;  // point-major, scheme-minor

    const SchemeResult& at(std::size_t point_idx, std::size_t scheme_idx) const {
        return results[point_idx * schemes.size() + scheme_idx];
    }
};

// Percentage improvement of a scheme's mean final utility over the myopic
// scheme at the same sweep point; empty when myopic was not part of the run.
inline std::optional<double> gain_vs_myopic(const ScenarioOutcome& o, std::size_t point_idx,
                                            std::size_t scheme_idx) {
    std::size_t myopic = o.schemes.size();
    for (std::size_t s = 0; s < o.schemes.size(); ++s)
        if (o.schemes[s] == "myopic") myopic = s;
    if (myopic >= o.schemes.size() || myopic == scheme_idx) return std::nullopt;
    const double base = o.at(point_idx, myopic).mean_final_gamma();
    if (base <= 0.0) return std::nullopt;
    return 100.0 * (o.at(point_idx, scheme_idx).mean_final_gamma() - base) / base;
}

// Run every (sweep point, scheme, replication) combination. Schemes listed in
// `compare` run as homogeneous populations against identical channel draws;
// with no compare list the configured strategy mix runs as a single scheme.
// Results do not depend on the thread count.
inline ScenarioOutcome run_scenario(const ScenarioConfig& cfg, unsigned threads = 1) {
    cfg.validate();

    struct Variant {
        std::string label;
        std::vector<Policy> strategy;
    };
    std::vector<Variant> variants;
    if (cfg.compare.empty()) {
        bool uniform = true;
        for (Policy p : cfg.strategy) uniform = uniform && p == cfg.strategy[0];
        variants.push_back(Variant{uniform ? to_string(cfg.strategy[0]) : "mixed",
                                   cfg.strategy});
    } else {
        for (Policy p : cfg.compare) variants.push_back(Variant{to_string(p), {p}});
    }

    ScenarioOutcome out;
    out.base = cfg;
    out.points = sweep_points(cfg);
    for (const Variant& v : variants) out.schemes.push_back(v.label);
    out.results.resize(out.points.size() * variants.size());
    for (std::size_t pi = 0; pi < out.points.size(); ++pi)
        for (std::size_t vi = 0; vi < variants.size(); ++vi) {
            SchemeResult& r = out.results[pi * variants.size() + vi];
            r.scheme = variants[vi].label;
            r.point = out.points[pi];
            r.reps.resize(cfg.replications);
        }

    struct Task {
        std::size_t pi;
        std::size_t vi;
        std::uint32_t rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(out.results.size() * cfg.replications);
    for (std::size_t pi = 0; pi < out.points.size(); ++pi)
        for (std::size_t vi = 0; vi < variants.size(); ++vi)
            for (std::uint32_t rep = 0; rep < cfg.replications; ++rep)
                tasks.push_back(Task{pi, vi, rep});

    auto work = [&](const Task& t) {
        ScenarioConfig c = cfg;
        const SweepPoint& pt = out.points[t.pi];
        c.num_sus = pt.num_sus;
        c.entry_fee = pt.entry_fee;
        c.monitor_fee = pt.monitor_fee;
        c.strategy = variants[t.vi].strategy;
        c.compare.clear();
        c.sweep_num_sus.clear();
        c.sweep_entry_fee.clear();
        c.sweep_monitor_fee.clear();
        MetricsSeries m = run(c, t.rep);

        SchemeResult& r = out.results[t.pi * variants.size() + t.vi];
        RepOutcome& ro = r.reps[t.rep];
        ro.final_gamma.assign(c.num_sus, 1.0);
        ro.final_jain = 1.0;
        if (m.slots() > 0) {
            for (std::size_t i = 0; i < c.num_sus; ++i) ro.final_gamma[i] = m.final_gamma(i);
            ro.final_jain = m.final_jain();
        }
        if (t.pi == 0 && t.rep == 0) r.trace = std::move(m);
    };

    const unsigned nt = std::max(1u, threads);
    if (nt == 1 || tasks.size() <= 1) {
        for (const Task& t : tasks) work(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex fail_mu;
        std::exception_ptr first_error;
        auto loop = [&] {
            for (;;) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) return;
                try {
                    work(tasks[idx]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (!first_error) first_error = std::current_exception();
                    next.store(tasks.size());
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(loop);
        for (std::thread& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return out;
}

inline std::string render_timeseries_csv(const MetricsSeries& m) {
    std::string out = "slot,su_id,gamma,bid,action,payment,jain_F\n";
    for (std::size_t t = 0; t < m.slots(); ++t)
        for (std::size_t i = 0; i < m.num_sus; ++i) {
            const std::size_t at = t * m.num_sus + i;
            csv_row(out, {std::to_string(t), std::to_string(i), format_g9(m.gamma[at]),
                          format_g9(m.bid[at]), m.did_bid[at] ? "bid" : "so",
                          format_g9(m.payment[at]), format_g9(m.jain[t])});
        }
    return out;
}

inline std::string render_summary_csv(const ScenarioOutcome& o) {
    std::string out =
        "scheme,num_sus,num_channels,entry_fee,monitor_fee,replications,"
        "mean_final_gamma,stddev_final_gamma,mean_final_jain,gain_vs_myopic_pct\n";
    for (std::size_t pi = 0; pi < o.points.size(); ++pi)
        for (std::size_t vi = 0; vi < o.schemes.size(); ++vi) {
            const SchemeResult& r = o.at(pi, vi);
            if (r.reps.empty()) continue;
            const auto gain = gain_vs_myopic(o, pi, vi);
            csv_row(out, {r.scheme, std::to_string(r.point.num_sus),
                          std::to_string(o.base.num_channels), format_g9(r.point.entry_fee),
                          format_g9(r.point.monitor_fee), std::to_string(r.reps.size()),
                          format_g9(r.mean_final_gamma()), format_g9(r.stddev_final_gamma()),
                          format_g9(r.mean_final_jain()),
                          gain ? format_g9(*gain) : std::string()});
        }
    return out;
}

// Destination for rendered output files.
struct OutputSink {
    virtual ~OutputSink() = default;
    virtual void write_file(const std::string& name, const std::string& content) = 0;
};

struct MemorySink final : OutputSink {
    std::map<std::string, std::string> files;
    void write_file(const std::string& name, const std::string& content) override {
        files[name] = content;
    }
};

struct DirectorySink final : OutputSink {
    std::filesystem::path dir;

    explicit DirectorySink(std::filesystem::path d) : dir(std::move(d)) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create output directory: " + ec.message(), dir.string());
    }

    void write_file(const std::string& name, const std::string& content) override {
        const std::filesystem::path path = dir / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw IoError("cannot open for writing", path.string());
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw IoError("write failed", path.string());
    }
};

// summary.csv plus one timeseries_<scheme>.csv per scheme (replication 0 at
// the first sweep point).
inline void write_outputs(const ScenarioOutcome& o, OutputSink& sink) {
    sink.write_file("summary.csv", render_summary_csv(o));
    for (std::size_t vi = 0; vi < o.schemes.size(); ++vi)
        sink.write_file("timeseries_" + o.schemes[vi] + ".csv",
                        render_timeseries_csv(o.at(0, vi).trace));
}

}  // namespace specbid
