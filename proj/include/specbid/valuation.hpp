#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "specbid/channel.hpp"

namespace specbid {

// Distribution of a user's per-slot valuation (its achievable rate), as a CDF
// plus a finite truncation of the support used to bracket root searches.
struct ValuationCdf {
    std::function<double(double)> cdf;
    double support_max = 1.0;
};

namespace detail {
inline double snr_scale(double gain, const RadioParams& p) {
    const double power = p.rate_includes_tx_power ? p.tx_power_w : 1.0;
    return gain * power / p.noise_w;
}
}  // namespace detail

// CDF of rate(gain, h, params) when h is unit-mean exponential:
// F(theta) = 1 - exp(-(2^(theta/W) - 1) / (G*P0/sigma^2)).
inline double rayleigh_rate_cdf(double theta, double gain, const RadioParams& params) {
    if (theta <= 0.0) return 0.0;
    const double s = detail::snr_scale(gain, params);
    return 1.0 - std::exp(-(std::exp2(theta / params.bandwidth_hz) - 1.0) / s);
}

// Same distribution packaged with its 1 - 1e-9 quantile as support_max.
inline ValuationCdf make_rayleigh_rate_cdf(double gain, const RadioParams& params) {
    const double s = detail::snr_scale(gain, params);
    const double h_hi = -std::log(1e-9);  // 1 - 1e-9 quantile of Exp(1)
    ValuationCdf v;
    v.cdf = [gain, params](double theta) { return rayleigh_rate_cdf(theta, gain, params); };
    v.support_max = params.bandwidth_hz * std::log2(1.0 + s * h_hi);
    return v;
}

// CDF of the highest of N-1 i.i.d. opponent valuations: G(y) = F(y)^(N-1).
inline double highest_opponent_cdf(double f_value, int num_users) {
    if (num_users < 2)
        throw std::invalid_argument("highest_opponent_cdf: need at least 2 users");
    if (!(f_value >= 0.0 && f_value <= 1.0))
        throw std::invalid_argument("highest_opponent_cdf: F value outside [0,1]");
    return std::pow(f_value, num_users - 1);
}

// First-auction participation threshold: the root of
//   theta * F(theta)^(N-1) = e1 / (1 + c1),
// found by bisection. The left side is nondecreasing, so the root is well
// defined; if the right side exceeds the value at support_max the threshold
// saturates there (stay out in round one).
inline double initial_threshold(double entry_fee_c1, double monitor_fee_e1, int num_users,
                                const ValuationCdf& F) {
    if (!std::isfinite(entry_fee_c1) || !std::isfinite(monitor_fee_e1))
        throw std::invalid_argument("initial_threshold: fees must be finite");
    if (entry_fee_c1 < 0.0 || monitor_fee_e1 < 0.0)
        throw std::invalid_argument("initial_threshold: fees must be >= 0");
    if (num_users < 2)
        throw std::invalid_argument("initial_threshold: need at least 2 users");

    const double rhs = monitor_fee_e1 / (1.0 + entry_fee_c1);
    const auto value = [&](double th) { return th * std::pow(F.cdf(th), num_users - 1); };

    if (rhs <= 0.0) return 0.0;
    if (value(F.support_max) < rhs) return F.support_max;

    double lo = 0.0;
    double hi = F.support_max;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double resid = value(mid) - rhs;
        if (std::abs(resid) <= 1e-12) return mid;
        if (resid < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

}  // namespace specbid
