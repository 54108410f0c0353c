#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "specbid/random.hpp"

namespace specbid {

// Radio parameters shared by all secondary users. Channels are identical in
// bandwidth; fading is normalized to unit mean so the per-user path loss
// carries all average-power information.
struct RadioParams {
    double bandwidth_hz = 1.0;
    double tx_power_w = 0.1;        // 100 mW
    double noise_w = 1e-12;         // -90 dBm
    double pathloss_exponent = 3.0;
    double frame_length_s = 1e-4;
    double doppler_hz = 100.0;
    // The SNR is G*h*P0/sigma^2; dropping P0 reduces it to G*h/sigma^2.
    bool rate_includes_tx_power = true;

    void validate() const {
        auto pos = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!pos(bandwidth_hz) || !pos(tx_power_w) || !pos(noise_w) ||
            !pos(pathloss_exponent) || !pos(frame_length_s) || !pos(doppler_hz))
            throw std::invalid_argument("RadioParams: all fields must be strictly positive");
        if (pathloss_exponent < 2.0)
            throw std::invalid_argument("RadioParams: pathloss_exponent must be >= 2");
    }

    bool operator==(const RadioParams&) const = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Power-law propagation loss, distance^(-exponent).
inline double pathloss(double dist, double exponent) {
    if (!(dist > 0.0)) throw std::invalid_argument("pathloss: distance must be > 0");
    return std::pow(dist, -exponent);
}

// Node placement plus the derived per-user path-loss gains toward the
// basestation.
struct Topology {
    std::vector<Vec2> su_positions;
    Vec2 basestation;
    std::vector<double> pathloss_gain;  // one entry per SU

    static Topology from_positions(std::vector<Vec2> sus, Vec2 bs, double exponent) {
        Topology t;
        t.su_positions = std::move(sus);
        t.basestation = bs;
        t.pathloss_gain.reserve(t.su_positions.size());
        for (const Vec2& p : t.su_positions)
            t.pathloss_gain.push_back(pathloss(distance(p, bs), exponent));
        return t;
    }

    // SUs uniform in an area_side x area_side square, basestation at a fixed
    // point bs_distance away from the square's center.
    static Topology random(std::size_t num_sus, double area_side, double bs_distance,
                           double exponent, RandomStream& rng) {
        std::vector<Vec2> sus(num_sus);
        for (Vec2& p : sus) {
            p.x = rng.uniform(0.0, area_side);
            p.y = rng.uniform(0.0, area_side);
        }
        const Vec2 bs{area_side / 2.0 + bs_distance, area_side / 2.0};
        return from_positions(std::move(sus), bs, exponent);
    }
};

// Per-slot channel state: squared-envelope Rayleigh fading per (SU, channel)
// and Bernoulli primary-user occupancy per channel. The underlying complex
// Gaussian components are kept so the fading can evolve as a first-order
// Gauss-Markov process while the marginal stays unit-mean exponential.
struct ChannelState {
    std::size_t num_sus = 0;
    std::size_t num_channels = 0;
    std::vector<double> fade_re;       // N*K, N(0, 1/2) marginals
    std::vector<double> fade_im;       // N*K
    std::vector<double> fading;        // N*K, fade_re^2 + fade_im^2
    std::vector<std::uint8_t> pu_active;  // K
    std::vector<double> pu_prob;          // K, Bernoulli occupancy probability

    double h(std::size_t su, std::size_t ch) const { return fading[su * num_channels + ch]; }

    void validate() const {
        for (double p : pu_prob)
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("ChannelState: pu_prob entries must be in [0,1]");
        for (double v : fading)
            if (!(v >= 0.0)) throw std::invalid_argument("ChannelState: fading must be >= 0");
    }

    static ChannelState init(std::size_t num_sus, std::size_t num_channels,
                             std::vector<double> pu_prob, RandomStream& rng) {
        ChannelState s;
        s.num_sus = num_sus;
        s.num_channels = num_channels;
        const std::size_t n = num_sus * num_channels;
        s.fade_re.resize(n);
        s.fade_im.resize(n);
        s.fading.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.fade_re[i] = rng.normal() * 0.70710678118654752440;  // sqrt(1/2)
            s.fade_im[i] = rng.normal() * 0.70710678118654752440;
            s.fading[i] = s.fade_re[i] * s.fade_re[i] + s.fade_im[i] * s.fade_im[i];
        }
        s.pu_active.assign(num_channels, 0);
        s.pu_prob = std::move(pu_prob);
        s.validate();
        return s;
    }
};

// Clarke/Jakes slot-to-slot correlation of the fading components:
// J0(2*pi*doppler*frame).
inline double fading_correlation(const RadioParams& p) {
    return std::cyl_bessel_j(0.0, 2.0 * 3.141592653589793238462643383280 *
                                      p.doppler_hz * p.frame_length_s);
}

// Advance the fading one slot with component correlation rho. rho = 0 gives
// independent draws, rho = 1 freezes the channel; the exponential marginal is
// preserved for any rho in [-1, 1].
inline void step_fading(ChannelState& s, double rho, RandomStream& rng) {
    const double mix = std::sqrt(std::max(0.0, 1.0 - rho * rho)) * 0.70710678118654752440;
    const std::size_t n = s.fade_re.size();
    for (std::size_t i = 0; i < n; ++i) {
        s.fade_re[i] = rho * s.fade_re[i] + mix * rng.normal();
        s.fade_im[i] = rho * s.fade_im[i] + mix * rng.normal();
        s.fading[i] = s.fade_re[i] * s.fade_re[i] + s.fade_im[i] * s.fade_im[i];
    }
}

inline void step_fading(ChannelState& s, const RadioParams& params, RandomStream& rng) {
    step_fading(s, fading_correlation(params), rng);
}

// Redraw primary-user occupancy, one independent Bernoulli per channel.
inline void step_pu(ChannelState& s, RandomStream& rng) {
    for (std::size_t k = 0; k < s.pu_active.size(); ++k)
        s.pu_active[k] = rng.bernoulli(s.pu_prob[k]) ? 1 : 0;
}

// Shannon rate of one SU on one channel: W * log2(1 + G*h*P0/sigma^2).
inline double rate(double gain, double fading_h, const RadioParams& p) {
    const double power = p.rate_includes_tx_power ? p.tx_power_w : 1.0;
    const double snr = gain * fading_h * power / p.noise_w;
    return p.bandwidth_hz * std::log2(1.0 + snr);
}

}  // namespace specbid
