#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "specbid/random.hpp"

namespace specbid {

enum class AuctionRule : std::uint8_t { FirstPrice, SecondPrice };

// One SU's per-slot action: a truthful bid on a single channel, or stay-out
// everywhere. channel < 0 means stay out.
struct AgentAction {
    std::int32_t channel = -1;
    double bid = 0.0;

    bool is_bid() const { return channel >= 0; }
    bool bids_on(std::size_t k) const { return channel == static_cast<std::int32_t>(k); }

    static AgentAction stay_out() { return {}; }
    static AgentAction bid_on(std::size_t k, double value) {
        if (!(value >= 0.0)) throw std::invalid_argument("AgentAction: bid must be >= 0");
        return {static_cast<std::int32_t>(k), value};
    }
};

// Winner per channel (-1 = none). On each channel without a primary user,
// the highest bidder wins; ties are broken uniformly at random from the
// shared stream so runs stay deterministic per seed. Primary-user presence
// voids the channel.
inline std::vector<std::int32_t> allocate(std::span<const AgentAction> actions,
                                          std::span<const std::uint8_t> pu_active,
                                          RandomStream& rng) {
    const std::size_t num_channels = pu_active.size();
    std::vector<std::int32_t> winner(num_channels, -1);
    std::vector<std::int32_t> top;
    for (std::size_t k = 0; k < num_channels; ++k) {
        if (pu_active[k]) continue;
        top.clear();
        double best = 0.0;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (!actions[i].bids_on(k)) continue;
            if (top.empty() || actions[i].bid > best) {
                best = actions[i].bid;
                top.assign(1, static_cast<std::int32_t>(i));
            } else if (actions[i].bid == best) {
                top.push_back(static_cast<std::int32_t>(i));
            }
        }
        if (top.empty()) continue;
        winner[k] = top.size() == 1 ? top[0] : top[rng.uniform_index(top.size())];
    }
    return winner;
}

// Winner's payment per channel (0 where there is no winner). Losers and
// stay-outs pay nothing. Under the second-price rule the winner pays the
// highest opposing bid on its channel, or 0 as the sole bidder; under the
// first-price rule it pays its own bid.
inline std::vector<double> settle(std::span<const AgentAction> actions,
                                  std::span<const std::int32_t> winner, AuctionRule rule) {
    std::vector<double> payment(winner.size(), 0.0);
    for (std::size_t k = 0; k < winner.size(); ++k) {
        if (winner[k] < 0) continue;
        if (rule == AuctionRule::FirstPrice) {
            payment[k] = actions[winner[k]].bid;
            continue;
        }
        double best_other = 0.0;
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (static_cast<std::int32_t>(i) == winner[k] || !actions[i].bids_on(k)) continue;
            if (actions[i].bid > best_other) best_other = actions[i].bid;
        }
        payment[k] = best_other;
    }
    return payment;
}

// Everything the coordinator resolved in one slot.
struct AuctionRound {
    std::uint64_t slot = 0;
    std::vector<AgentAction> actions;      // per SU
    std::vector<std::int32_t> winner;      // per channel, -1 = none
    std::vector<double> payment;           // per channel, winner's payment
    std::vector<std::uint8_t> pu_active;   // per channel
    AuctionRule rule = AuctionRule::SecondPrice;

    std::size_t num_channels() const { return winner.size(); }
    bool won(std::size_t su, std::size_t ch) const {
        return winner[ch] == static_cast<std::int32_t>(su);
    }
};

// Public per-channel outcome of one slot: the winning bid and the winner's
// payment, present only when the channel had at least one bid and no primary
// user.
struct ChannelBroadcast {
    std::optional<double> max_bid;
    std::optional<double> payment;
    bool pu = false;
};

using Broadcast = std::vector<ChannelBroadcast>;

inline Broadcast publish(const AuctionRound& round) {
    Broadcast out(round.num_channels());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].pu = round.pu_active[k] != 0;
        if (round.winner[k] < 0) continue;
        out[k].max_bid = round.actions[round.winner[k]].bid;
        out[k].payment = round.payment[k];
    }
    return out;
}

}  // namespace specbid
