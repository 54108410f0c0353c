#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include "specbid/assignment.hpp"
#include "specbid/auction.hpp"
#include "specbid/random.hpp"

namespace specbid {

enum class Policy : std::uint8_t { Myopic, Threshold, Nrl, Bcb, Ga };

struct Fees {
    double entry_c = 10.0;    // charged when a bid is submitted
    double monitor_e = 1.0;   // charged every slot
};

// Per-SU running totals and the learned participation threshold. Reward and
// cost both start at 1, so the utility ratio starts at 1.
struct AgentLedger {
    double reward = 1.0;         // accumulated valuation of won slots
    double cost = 1.0;           // payments plus fees
    double threshold = 0.0;      // theta_bar, participation cutoff
    double alpha = 0.05;         // moving-average weight for threshold updates
};

// Always participate, bidding the true valuation on the chosen channel.
inline AgentAction myopic_act(std::span<const double> valuations, std::size_t channel) {
    return AgentAction::bid_on(channel, valuations[channel]);
}

// Participation test of the single-channel strategy. Staying out keeps the
// utility at a = r/(c + e); bidding is worth it when the heuristic estimate
// b = (r + theta - theta_bar)/(c + e + c_entry) is at least a.
inline AgentAction threshold_act(const AgentLedger& ledger, double valuation,
                                 std::size_t channel, Fees fees) {
    const double a = ledger.reward / (ledger.cost + fees.monitor_e);
    const double b = (ledger.reward + valuation - ledger.threshold) /
                     (ledger.cost + fees.monitor_e + fees.entry_c);
    if (a > b) return AgentAction::stay_out();
    return AgentAction::bid_on(channel, valuation);
}

// Threshold update from the public outcome of the agent's channel. No winner
// (or a primary-user round) means no observed payment and no update.
// Otherwise the payment p_m replaces a share alpha of theta_bar when the
// agent either stayed out of an auction that cleared below its threshold, or
// bid and lost, or won at a payment at or above its threshold.
inline void threshold_update(AgentLedger& ledger, bool did_bid, bool won,
                             const ChannelBroadcast& outcome) {
    if (!outcome.payment) return;
    const double pm = *outcome.payment;
    const bool fire = did_bid ? (!won || pm >= ledger.threshold) : (pm < ledger.threshold);
    if (fire)
        ledger.threshold = ledger.alpha * pm + (1.0 - ledger.alpha) * ledger.threshold;
}

// What one agent remembers about one completed slot: its own valuations on
// every channel, where it competed, and the public broadcast.
struct WindowSlot {
    std::vector<double> valuations;  // K entries
    std::int32_t chosen = 0;         // channel selected for this slot
    bool did_bid = false;
    bool won = false;
    Broadcast broadcast;             // K entries
};

// Regret-matching state for channel selection. regret is a K x K row-major
// matrix over (played channel, alternative channel); prob is the channel
// selection distribution for the next slot.
struct RegretState {
    std::size_t window_nu = 10;
    std::deque<WindowSlot> window;
    std::vector<double> regret;       // K*K
    std::vector<double> prob;         // K
    double kappa = 1.0;               // normalization floor, doubled if ever too small
    double max_regret_seen = 0.0;
    std::int32_t current_channel = 0;

    std::size_t num_channels() const { return prob.size(); }

    static RegretState init(std::size_t num_channels, std::size_t window_nu, double kappa) {
        if (num_channels == 0) throw std::invalid_argument("RegretState: need a channel");
        if (window_nu == 0) throw std::invalid_argument("RegretState: window must be >= 1");
        RegretState s;
        s.window_nu = window_nu;
        s.kappa = kappa;
        s.regret.assign(num_channels * num_channels, 0.0);
        s.prob.assign(num_channels, 1.0 / static_cast<double>(num_channels));
        return s;
    }
};

// Reward the agent would have collected on alt_channel over the buffered
// slots: each slot credits the valuation on alt_channel when it beats the
// strongest opposing bid there (own winning bid replaced by the runner-up,
// i.e. the published payment) and the primary user was absent.
inline double counterfactual_reward(const std::deque<WindowSlot>& window, std::size_t alt_channel) {
    double total = 0.0;
    for (const WindowSlot& s : window) {
        const ChannelBroadcast& cb = s.broadcast[alt_channel];
        if (cb.pu) continue;
        const double theta = s.valuations[alt_channel];
        double top = 0.0;
        if (cb.max_bid) {
            const bool own_max =
                s.won && s.did_bid && s.chosen == static_cast<std::int32_t>(alt_channel);
            top = own_max ? cb.payment.value_or(0.0) : *cb.max_bid;
        }
        if (theta > top) total += theta;
    }
    return total;
}

inline double realized_window_reward(const std::deque<WindowSlot>& window) {
    double total = 0.0;
    for (const WindowSlot& s : window)
        if (s.won) total += s.valuations[static_cast<std::size_t>(s.chosen)];
    return total;
}

// Append the newest slot, keeping at most window_nu of them.
inline void push_window(RegretState& state, WindowSlot slot) {
    state.window.push_back(std::move(slot));
    while (state.window.size() > state.window_nu) state.window.pop_front();
}

// Average regret over the window: D(m, mbar) = (1/nu) * sum of
// (counterfactual on mbar - realized reward); R = max(D, 0).
inline void regret_update(RegretState& state) {
    if (state.window.empty()) throw std::invalid_argument("regret_update: empty window");
    const std::size_t k = state.num_channels();
    const double realized = realized_window_reward(state.window);
    const double inv_nu = 1.0 / static_cast<double>(state.window_nu);
    for (std::size_t alt = 0; alt < k; ++alt) {
        const double d = inv_nu * (counterfactual_reward(state.window, alt) - realized);
        const double r = std::max(d, 0.0);
        for (std::size_t m = 0; m < k; ++m) state.regret[m * k + alt] = r;
        if (alt != static_cast<std::size_t>(state.current_channel))
            state.max_regret_seen = std::max(state.max_regret_seen, r);
    }
}

// Selection probabilities from the regrets of the channel just played:
// P(mbar) = R(m, mbar) / kappa for mbar != m, remainder on m. kappa tracks
// 2*K*(largest regret seen) and doubles if the remainder ever goes negative.
inline void probability_update(RegretState& state) {
    const std::size_t k = state.num_channels();
    const std::size_t m = static_cast<std::size_t>(state.current_channel);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double denom =
            std::max(state.kappa, 2.0 * static_cast<double>(k) * state.max_regret_seen);
        double sum = 0.0;
        for (std::size_t alt = 0; alt < k; ++alt) {
            if (alt == m) continue;
            state.prob[alt] = state.regret[m * k + alt] / denom;
            sum += state.prob[alt];
        }
        if (sum <= 1.0) {
            state.prob[m] = 1.0 - sum;
            return;
        }
        state.kappa = denom * 2.0;  // normalization failed, retry larger
    }
    throw std::invalid_argument("probability_update: kappa failed to normalize");
}

// Draw next slot's channel from the selection distribution.
inline std::size_t select_channel(const RegretState& state, RandomStream& rng) {
    return rng.sample(state.prob);
}

// Best-channel bidding: the channel with the highest valuation, lowest index
// on ties.
inline std::size_t bcb_act(std::span<const double> valuations) {
    if (valuations.empty()) throw std::invalid_argument("bcb_act: no channels");
    std::size_t best = 0;
    for (std::size_t k = 1; k < valuations.size(); ++k)
        if (valuations[k] > valuations[best]) best = k;
    return best;
}

// Full-information oracle: a maximum-total-valuation one-to-one matching of
// SUs to channels without a primary user. Returns the assigned channel per
// SU, -1 for stay-out.
inline std::vector<std::int32_t> ga_assign(const std::vector<double>& valuations,
                                           std::size_t num_sus, std::size_t num_channels,
                                           std::span<const std::uint8_t> pu_active) {
    if (valuations.size() != num_sus * num_channels)
        throw std::invalid_argument("ga_assign: bad matrix shape");
    std::vector<std::int32_t> open;
    for (std::size_t k = 0; k < num_channels; ++k)
        if (!pu_active[k]) open.push_back(static_cast<std::int32_t>(k));

    std::vector<std::int32_t> out(num_sus, -1);
    if (open.empty() || num_sus == 0) return out;

    std::vector<double> sub(num_sus * open.size());
    for (std::size_t i = 0; i < num_sus; ++i)
        for (std::size_t j = 0; j < open.size(); ++j)
            sub[i * open.size() + j] = valuations[i * num_channels + open[j]];

    const std::vector<int> match =
        max_assignment(sub, static_cast<int>(num_sus), static_cast<int>(open.size()));
    for (std::size_t i = 0; i < num_sus; ++i)
        if (match[i] >= 0) out[i] = open[match[i]];
    return out;
}

}  // namespace specbid
