#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specbid/agents.hpp"
#include "specbid/auction.hpp"
#include "specbid/channel.hpp"
#include "specbid/errors.hpp"

namespace specbid {

// Deterministic primary-user busy period: channel is forced busy for slots in
// [begin, end). channel == -1 applies to every channel.
struct PuWindow {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::int32_t channel = -1;
    bool operator==(const PuWindow&) const = default;
};

// Fee override for slots in [begin, end); later segments win on overlap.
struct FeeSegment {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    double value = 0.0;
    bool operator==(const FeeSegment&) const = default;
};

// Full description of one experiment. Defaults reproduce the common radio
// setup used throughout the scenarios: 100m x 100m network, basestation
// 1000m from its center, 100 mW transmit power, -90 dBm noise, unit
// bandwidth, 100 us frames, 100 Hz Doppler, alpha = 0.05, nu = 10.
struct ScenarioConfig {
    std::uint32_t num_sus = 2;
    std::uint32_t num_channels = 1;
    std::uint64_t horizon = 10000;
    double entry_fee = 10.0;
    double monitor_fee = 1.0;
    std::vector<FeeSegment> entry_fee_schedule;    // per-slot overrides, usually empty
    std::vector<FeeSegment> monitor_fee_schedule;
    RadioParams radio;

    double area_side = 100.0;
    double bs_distance = 1000.0;
    std::vector<Vec2> su_positions;     // empty: drawn per replication
    std::optional<Vec2> bs_position;    // unset: center + (bs_distance, 0)

    std::vector<double> pu_prob{0.0};   // one entry, or one per channel
    std::vector<PuWindow> pu_windows;

    std::vector<Policy> strategy{Policy::Threshold};  // one entry, or one per SU
    double alpha = 0.05;
    std::uint32_t nu = 10;
    double kappa_init = 1.0;
    AuctionRule auction_rule = AuctionRule::SecondPrice;
    bool monitor_fee_per_channel = false;
    std::uint64_t seed = 1;
    std::uint32_t replications = 1;

    // Optional comparison harness: run the same scenario once per scheme,
    // with common random numbers, instead of using `strategy`.
    std::vector<Policy> compare;
    // Optional parameter grid; empty means the base value only.
    std::vector<std::uint32_t> sweep_num_sus;
    std::vector<double> sweep_entry_fee;
    std::vector<double> sweep_monitor_fee;

    bool operator==(const ScenarioConfig&) const = default;

    double pu_prob_for(std::size_t ch) const {
        return pu_prob.size() == 1 ? pu_prob[0] : pu_prob[ch];
    }
    Policy strategy_for(std::size_t su) const {
        return strategy.size() == 1 ? strategy[0] : strategy[su];
    }
    double entry_fee_at(std::uint64_t slot) const {
        double v = entry_fee;
        for (const FeeSegment& s : entry_fee_schedule)
            if (slot >= s.begin && slot < s.end) v = s.value;
        return v;
    }
    double monitor_fee_at(std::uint64_t slot) const {
        double v = monitor_fee;
        for (const FeeSegment& s : monitor_fee_schedule)
            if (slot >= s.begin && slot < s.end) v = s.value;
        return v;
    }

    void validate() const;
};

inline const char* to_string(Policy p) {
    switch (p) {
        case Policy::Myopic: return "myopic";
        case Policy::Threshold: return "threshold";
        case Policy::Nrl: return "nrl";
        case Policy::Bcb: return "bcb";
        case Policy::Ga: return "ga";
    }
    return "?";
}

inline const char* to_string(AuctionRule r) {
    return r == AuctionRule::SecondPrice ? "second" : "first";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            const auto piece = trim(s.substr(start, i - start));
            if (!piece.empty()) out.push_back(piece);
            start = i + 1;
        }
    }
    return out;
}

inline double parse_double(std::string_view v, const char* key, int line) {
    const std::string tmp(v);
    char* end = nullptr;
    const double d = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size() || tmp.empty())
        throw ConfigError(std::string(key) + ": not a number: '" + tmp + "'", line);
    return d;
}

inline std::uint64_t parse_u64(std::string_view v, const char* key, int line) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError(std::string(key) + ": not an unsigned integer: '" + std::string(v) + "'",
                          line);
    return out;
}

inline std::uint32_t parse_u32(std::string_view v, const char* key, int line) {
    const std::uint64_t out = parse_u64(v, key, line);
    if (out > 0xffffffffULL)
        throw ConfigError(std::string(key) + ": value too large", line);
    return static_cast<std::uint32_t>(out);
}

inline bool parse_bool(std::string_view v, const char* key, int line) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(v) + "'",
                      line);
}

inline Policy parse_policy(std::string_view v, const char* key, int line) {
    if (v == "myopic") return Policy::Myopic;
    if (v == "threshold") return Policy::Threshold;
    if (v == "nrl") return Policy::Nrl;
    if (v == "bcb") return Policy::Bcb;
    if (v == "ga") return Policy::Ga;
    throw ConfigError(std::string(key) + ": unknown strategy '" + std::string(v) +
                          "' (expected myopic|threshold|nrl|bcb|ga)",
                      line);
}

inline Vec2 parse_vec2(std::string_view v, const char* key, int line) {
    const auto parts = split(v, ',');
    if (parts.size() != 2)
        throw ConfigError(std::string(key) + ": expected 'x,y', got '" + std::string(v) + "'", line);
    return Vec2{parse_double(parts[0], key, line), parse_double(parts[1], key, line)};
}

inline FeeSegment parse_fee_segment(std::string_view v, const char* key, int line) {
    const auto at = v.find('@');
    if (at == std::string_view::npos)
        throw ConfigError(std::string(key) + ": expected 'begin:end@fee', got '" +
                              std::string(v) + "'",
                          line);
    const std::string_view range = trim(v.substr(0, at));
    const auto colon = range.find(':');
    if (colon == std::string_view::npos)
        throw ConfigError(std::string(key) + ": expected 'begin:end@fee', got '" +
                              std::string(v) + "'",
                          line);
    FeeSegment s;
    s.begin = parse_u64(trim(range.substr(0, colon)), key, line);
    s.end = parse_u64(trim(range.substr(colon + 1)), key, line);
    s.value = parse_double(trim(v.substr(at + 1)), key, line);
    if (s.end < s.begin) throw ConfigError(std::string(key) + ": segment end before begin", line);
    return s;
}

inline PuWindow parse_pu_window(std::string_view v, const char* key, int line) {
    PuWindow w;
    std::string_view range = v;
    if (const auto at = v.find('@'); at != std::string_view::npos) {
        w.channel = static_cast<std::int32_t>(parse_u32(trim(v.substr(at + 1)), key, line));
        range = trim(v.substr(0, at));
    }
    const auto colon = range.find(':');
    if (colon == std::string_view::npos)
        throw ConfigError(std::string(key) + ": expected 'begin:end[@channel]', got '" +
                              std::string(v) + "'",
                          line);
    w.begin = parse_u64(trim(range.substr(0, colon)), key, line);
    w.end = parse_u64(trim(range.substr(colon + 1)), key, line);
    if (w.end < w.begin)
        throw ConfigError(std::string(key) + ": window end before begin", line);
    return w;
}

inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (num_sus < 1) fail("num_sus: must be >= 1");
    if (num_channels < 1) fail("num_channels: must be >= 1");
    try {
        radio.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    if (!(std::isfinite(entry_fee) && entry_fee >= 0.0)) fail("entry_fee: must be >= 0");
    if (!(std::isfinite(monitor_fee) && monitor_fee >= 0.0)) fail("monitor_fee: must be >= 0");
    for (const FeeSegment& s : entry_fee_schedule)
        if (!(std::isfinite(s.value) && s.value >= 0.0))
            fail("entry_fee_schedule: fees must be >= 0");
    for (const FeeSegment& s : monitor_fee_schedule)
        if (!(std::isfinite(s.value) && s.value >= 0.0))
            fail("monitor_fee_schedule: fees must be >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail("alpha: must be in (0,1]");
    if (nu < 1) fail("nu: must be >= 1");
    if (!(std::isfinite(kappa_init) && kappa_init > 0.0)) fail("kappa_init: must be > 0");
    if (!(area_side > 0.0)) fail("area_side: must be > 0");
    if (!(bs_distance > 0.0)) fail("bs_distance: must be > 0");
    if (pu_prob.empty()) fail("pu_prob: needs at least one value");
    if (pu_prob.size() != 1 && pu_prob.size() != num_channels)
        fail("pu_prob: give one value or one per channel");
    for (double p : pu_prob)
        if (!(p >= 0.0 && p <= 1.0)) fail("pu_prob: values must be in [0,1]");
    for (const PuWindow& w : pu_windows)
        if (w.channel >= static_cast<std::int32_t>(num_channels))
            fail("pu_windows: channel index out of range");
    if (strategy.empty()) fail("strategy: needs at least one tag");
    if (strategy.size() != 1 && strategy.size() != num_sus)
        fail("strategy: give one tag or one per SU");
    if (!su_positions.empty() && su_positions.size() != num_sus)
        fail("su_positions: give one position per SU");
    if (!sweep_num_sus.empty()) {
        if (strategy.size() != 1) fail("sweep_num_sus: needs a single shared strategy");
        if (!su_positions.empty()) fail("sweep_num_sus: incompatible with explicit su_positions");
        for (std::uint32_t n : sweep_num_sus)
            if (n < 1) fail("sweep_num_sus: values must be >= 1");
    }
    for (double c : sweep_entry_fee)
        if (!(std::isfinite(c) && c >= 0.0)) fail("sweep_entry_fee: values must be >= 0");
    for (double e : sweep_monitor_fee)
        if (!(std::isfinite(e) && e >= 0.0)) fail("sweep_monitor_fee: values must be >= 0");
}

// Named scenario presets. Each expands to a complete config that reproduces
// one of the stock experiments; explicit keys in the same document override
// preset values.
inline ScenarioConfig preset_config(std::string_view name, int line = 0) {
    ScenarioConfig c;
    if (name == "fig2") {
        c.num_sus = 2;
        c.num_channels = 1;
        c.horizon = 10000;
        c.entry_fee = 10.0;
        c.monitor_fee = 1.0;
        c.pu_windows.push_back(PuWindow{4000, 6000, 0});
        c.compare = {Policy::Threshold, Policy::Myopic};
        c.replications = 20;
    } else if (name == "fig3") {
        c.num_sus = 2;
        c.num_channels = 1;
        c.horizon = 10000;
        c.sweep_entry_fee = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        c.sweep_monitor_fee = {1, 5, 10};
        c.compare = {Policy::Threshold, Policy::Myopic};
        c.replications = 20;
    } else if (name == "fig4") {
        c.num_sus = 16;
        c.num_channels = 1;
        c.horizon = 10000;
        c.entry_fee = 5.0;
        c.monitor_fee = 5.0;
        c.strategy = {Policy::Threshold};
        c.replications = 1;
    } else if (name == "fig56") {
        c.num_sus = 2;
        c.num_channels = 1;
        c.horizon = 10000;
        c.entry_fee = 10.0;
        c.monitor_fee = 1.0;
        c.sweep_num_sus = {2, 4, 8, 16};
        c.compare = {Policy::Threshold, Policy::Myopic};
        c.replications = 20;
    } else if (name == "fig7") {
        c.num_sus = 2;
        c.num_channels = 2;
        c.horizon = 10000;
        c.entry_fee = 5.0;
        c.monitor_fee = 5.0;
        c.nu = 10;
        c.strategy = {Policy::Nrl};
        c.compare = {Policy::Bcb, Policy::Ga, Policy::Nrl};
        c.replications = 20;
    } else {
        throw ConfigError("preset: unknown name '" + std::string(name) +
                              "' (expected fig2|fig3|fig4|fig56|fig7)",
                          line);
    }
    return c;
}

// Parse a flat key = value document. '#' starts a comment; a `preset` key is
// applied first and the remaining keys override it, whatever their order.
// Errors carry the offending line number. A non-null `base` supplies the
// starting config (e.g. a preset chosen outside the document); the document
// may not name its own preset on top of it.
inline ScenarioConfig parse_config(std::string_view text,
                                   const ScenarioConfig* base = nullptr) {
    using detail::trim;

    struct Line {
        std::string_view key;
        std::string_view value;
        int number;
    };
    std::vector<Line> lines;
    {
        std::size_t pos = 0;
        int number = 0;
        while (pos <= text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view raw = text.substr(pos, eol - pos);
            ++number;
            pos = eol + 1;
            if (const auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            const std::string_view stripped = trim(raw);
            if (stripped.empty()) continue;
            const std::size_t eq = stripped.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("expected 'key = value'", number);
            lines.push_back(Line{trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)),
                                 number});
            if (lines.back().key.empty()) throw ConfigError("missing key before '='", number);
        }
    }

    ScenarioConfig cfg = base ? *base : ScenarioConfig{};
    bool preset_seen = false;
    for (const Line& ln : lines) {
        if (ln.key != "preset") continue;
        if (base)
            throw ConfigError("preset: already chosen outside this file", ln.number);
        if (preset_seen) throw ConfigError("preset: given more than once", ln.number);
        preset_seen = true;
        cfg = preset_config(ln.value, ln.number);
    }

    using detail::parse_bool;
    using detail::parse_double;
    using detail::parse_policy;
    using detail::parse_pu_window;
    using detail::parse_u32;
    using detail::parse_u64;
    using detail::parse_vec2;
    using detail::split;

    for (const Line& ln : lines) {
        const std::string_view k = ln.key;
        const std::string_view v = ln.value;
        const int n = ln.number;
        if (k == "preset") {
            continue;
        } else if (k == "num_sus") {
            cfg.num_sus = parse_u32(v, "num_sus", n);
        } else if (k == "num_channels") {
            cfg.num_channels = parse_u32(v, "num_channels", n);
        } else if (k == "horizon") {
            cfg.horizon = parse_u64(v, "horizon", n);
        } else if (k == "entry_fee") {
            cfg.entry_fee = parse_double(v, "entry_fee", n);
        } else if (k == "monitor_fee") {
            cfg.monitor_fee = parse_double(v, "monitor_fee", n);
        } else if (k == "entry_fee_schedule") {
            cfg.entry_fee_schedule.clear();
            for (const auto piece : split(v, ','))
                cfg.entry_fee_schedule.push_back(
                    detail::parse_fee_segment(piece, "entry_fee_schedule", n));
        } else if (k == "monitor_fee_schedule") {
            cfg.monitor_fee_schedule.clear();
            for (const auto piece : split(v, ','))
                cfg.monitor_fee_schedule.push_back(
                    detail::parse_fee_segment(piece, "monitor_fee_schedule", n));
        } else if (k == "bandwidth") {
            cfg.radio.bandwidth_hz = parse_double(v, "bandwidth", n);
        } else if (k == "tx_power") {
            cfg.radio.tx_power_w = parse_double(v, "tx_power", n);
        } else if (k == "noise") {
            cfg.radio.noise_w = parse_double(v, "noise", n);
        } else if (k == "pathloss_exponent") {
            cfg.radio.pathloss_exponent = parse_double(v, "pathloss_exponent", n);
        } else if (k == "frame_length") {
            cfg.radio.frame_length_s = parse_double(v, "frame_length", n);
        } else if (k == "doppler") {
            cfg.radio.doppler_hz = parse_double(v, "doppler", n);
        } else if (k == "rate_includes_tx_power") {
            cfg.radio.rate_includes_tx_power = parse_bool(v, "rate_includes_tx_power", n);
        } else if (k == "alpha") {
            cfg.alpha = parse_double(v, "alpha", n);
            if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
                throw ConfigError("alpha: must be in (0,1]", n);
        } else if (k == "nu") {
            cfg.nu = parse_u32(v, "nu", n);
            if (cfg.nu < 1) throw ConfigError("nu: must be >= 1", n);
        } else if (k == "kappa_init") {
            cfg.kappa_init = parse_double(v, "kappa_init", n);
        } else if (k == "auction_rule") {
            if (v == "second")
                cfg.auction_rule = AuctionRule::SecondPrice;
            else if (v == "first")
                cfg.auction_rule = AuctionRule::FirstPrice;
            else
                throw ConfigError("auction_rule: expected first or second", n);
        } else if (k == "monitor_fee_per_channel") {
            cfg.monitor_fee_per_channel = parse_bool(v, "monitor_fee_per_channel", n);
        } else if (k == "seed") {
            cfg.seed = parse_u64(v, "seed", n);
        } else if (k == "replications") {
            cfg.replications = parse_u32(v, "replications", n);
        } else if (k == "area_side") {
            cfg.area_side = parse_double(v, "area_side", n);
        } else if (k == "bs_distance") {
            cfg.bs_distance = parse_double(v, "bs_distance", n);
        } else if (k == "su_positions") {
            cfg.su_positions.clear();
            for (const auto piece : split(v, ';'))
                cfg.su_positions.push_back(parse_vec2(piece, "su_positions", n));
        } else if (k == "bs_position") {
            cfg.bs_position = parse_vec2(v, "bs_position", n);
        } else if (k == "pu_prob") {
            cfg.pu_prob.clear();
            for (const auto piece : split(v, ','))
                cfg.pu_prob.push_back(parse_double(piece, "pu_prob", n));
            for (double p : cfg.pu_prob)
                if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("pu_prob: must be in [0,1]", n);
        } else if (k == "pu_windows") {
            cfg.pu_windows.clear();
            for (const auto piece : split(v, ','))
                cfg.pu_windows.push_back(parse_pu_window(piece, "pu_windows", n));
        } else if (k == "strategy") {
            cfg.strategy.clear();
            for (const auto piece : split(v, ','))
                cfg.strategy.push_back(parse_policy(piece, "strategy", n));
            if (cfg.strategy.empty()) throw ConfigError("strategy: empty list", n);
        } else if (k == "compare") {
            cfg.compare.clear();
            for (const auto piece : split(v, ','))
                cfg.compare.push_back(parse_policy(piece, "compare", n));
        } else if (k == "sweep_num_sus") {
            cfg.sweep_num_sus.clear();
            for (const auto piece : split(v, ','))
                cfg.sweep_num_sus.push_back(parse_u32(piece, "sweep_num_sus", n));
        } else if (k == "sweep_entry_fee") {
            cfg.sweep_entry_fee.clear();
            for (const auto piece : split(v, ','))
                cfg.sweep_entry_fee.push_back(parse_double(piece, "sweep_entry_fee", n));
        } else if (k == "sweep_monitor_fee") {
            cfg.sweep_monitor_fee.clear();
            for (const auto piece : split(v, ','))
                cfg.sweep_monitor_fee.push_back(parse_double(piece, "sweep_monitor_fee", n));
        } else {
            throw ConfigError("unknown key '" + std::string(k) + "'", n);
        }
    }

    cfg.validate();
    return cfg;
}

// Canonical text form; parse_config(serialize_config(c)) == c for any valid c.
inline std::string serialize_config(const ScenarioConfig& c) {
    using detail::format_g17;
    std::string out;
    auto kv = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    auto fee_schedule = [&kv](std::string_view key, const std::vector<FeeSegment>& xs) {
        if (xs.empty()) return;
        std::string v;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) v += ", ";
            v += std::to_string(xs[i].begin) + ":" + std::to_string(xs[i].end) + "@" +
                 format_g17(xs[i].value);
        }
        kv(key, v);
    };
    kv("num_sus", std::to_string(c.num_sus));
    kv("num_channels", std::to_string(c.num_channels));
    kv("horizon", std::to_string(c.horizon));
    kv("entry_fee", format_g17(c.entry_fee));
    kv("monitor_fee", format_g17(c.monitor_fee));
    fee_schedule("entry_fee_schedule", c.entry_fee_schedule);
    fee_schedule("monitor_fee_schedule", c.monitor_fee_schedule);
    kv("bandwidth", format_g17(c.radio.bandwidth_hz));
    kv("tx_power", format_g17(c.radio.tx_power_w));
    kv("noise", format_g17(c.radio.noise_w));
    kv("pathloss_exponent", format_g17(c.radio.pathloss_exponent));
    kv("frame_length", format_g17(c.radio.frame_length_s));
    kv("doppler", format_g17(c.radio.doppler_hz));
    kv("rate_includes_tx_power", c.radio.rate_includes_tx_power ? "true" : "false");
    kv("alpha", format_g17(c.alpha));
    kv("nu", std::to_string(c.nu));
    kv("kappa_init", format_g17(c.kappa_init));
    kv("auction_rule", to_string(c.auction_rule));
    kv("monitor_fee_per_channel", c.monitor_fee_per_channel ? "true" : "false");
    kv("seed", std::to_string(c.seed));
    kv("replications", std::to_string(c.replications));
    kv("area_side", format_g17(c.area_side));
    kv("bs_distance", format_g17(c.bs_distance));
    if (!c.su_positions.empty()) {
        std::string v;
        for (std::size_t i = 0; i < c.su_positions.size(); ++i) {
            if (i) v += "; ";
            v += format_g17(c.su_positions[i].x) + "," + format_g17(c.su_positions[i].y);
        }
        kv("su_positions", v);
    }
    if (c.bs_position)
        kv("bs_position", format_g17(c.bs_position->x) + "," + format_g17(c.bs_position->y));
    {
        std::string v;
        for (std::size_t i = 0; i < c.pu_prob.size(); ++i) {
            if (i) v += ", ";
            v += format_g17(c.pu_prob[i]);
        }
        kv("pu_prob", v);
    }
    if (!c.pu_windows.empty()) {
        std::string v;
        for (std::size_t i = 0; i < c.pu_windows.size(); ++i) {
            if (i) v += ", ";
            v += std::to_string(c.pu_windows[i].begin) + ":" + std::to_string(c.pu_windows[i].end);
            if (c.pu_windows[i].channel >= 0) v += "@" + std::to_string(c.pu_windows[i].channel);
        }
        kv("pu_windows", v);
    }
    {
        std::string v;
        for (std::size_t i = 0; i < c.strategy.size(); ++i) {
            if (i) v += ", ";
            v += to_string(c.strategy[i]);
        }
        kv("strategy", v);
    }
    if (!c.compare.empty()) {
        std::string v;
        for (std::size_t i = 0; i < c.compare.size(); ++i) {
            if (i) v += ", ";
            v += to_string(c.compare[i]);
        }
        kv("compare", v);
    }
    auto list_u32 = [&kv](std::string_view key, const std::vector<std::uint32_t>& xs) {
        if (xs.empty()) return;
        std::string v;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) v += ", ";
            v += std::to_string(xs[i]);
        }
        kv(key, v);
    };
    auto list_dbl = [&kv](std::string_view key, const std::vector<double>& xs) {
        if (xs.empty()) return;
        std::string v;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) v += ", ";
            v += format_g17(xs[i]);
        }
        kv(key, v);
    };
    list_u32("sweep_num_sus", c.sweep_num_sus);
    list_dbl("sweep_entry_fee", c.sweep_entry_fee);
    list_dbl("sweep_monitor_fee", c.sweep_monitor_fee);
    return out;
}

}  // namespace specbid
