#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "specbid/agents.hpp"
#include "specbid/auction.hpp"
#include "specbid/channel.hpp"
#include "specbid/config.hpp"
#include "specbid/errors.hpp"
#include "specbid/random.hpp"
#include "specbid/valuation.hpp"

namespace specbid {

inline double utility(const AgentLedger& l) { return l.reward / l.cost; }

inline double jain_fairness(std::span<const double> utilities) {
    if (utilities.empty()) throw std::invalid_argument("jain_fairness: empty input");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double u : utilities) {
        sum += u;
        sum_sq += u * u;
    }
    if (sum_sq == 0.0) throw std::invalid_argument("jain_fairness: all utilities zero");
    return sum * sum / (static_cast<double>(utilities.size()) * sum_sq);
}

// Everything produced by one simulated slot, enough to replay the accounting
// from the outside.
struct StepResult {
    AuctionRound round;
    Broadcast broadcast;
    std::vector<double> valuations;      // num_sus x num_channels, row-major
    std::vector<std::int32_t> monitored; // channel each SU observed, -1 none
};

namespace detail {

// Highest-valuation channel not blocked by a primary user; -1 if all blocked.
inline std::int32_t best_free_channel(std::span<const double> row,
                                      std::span<const std::uint8_t> pu_active) {
    std::int32_t best = -1;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (pu_active[k]) continue;
        if (best < 0 || row[k] > row[static_cast<std::size_t>(best)])
            best = static_cast<std::int32_t>(k);
    }
    return best;
}

}  // namespace detail

// One replication's mutable simulation state. Streams for fading, primary
// users, tie breaks and channel choices are derived independently from
// (seed, replication), so schemes compared under the same seed see the same
// channel realizations.
struct World {
    ScenarioConfig cfg;
    std::uint32_t replication = 0;
    std::uint64_t slot = 0;
    double fading_rho = 0.0;
    Topology topology;
    ChannelState channels;
    std::vector<Policy> policies;
    std::vector<AgentLedger> ledgers;
    std::vector<RegretState> regrets;
    RandomStream fading_rng;
    RandomStream pu_rng;
    RandomStream tie_rng;
    RandomStream choice_rng;

    static World create(const ScenarioConfig& cfg, std::uint32_t replication) {
        cfg.validate();
        const std::uint64_t rep_seed = derive_seed(cfg.seed, replication);
        World w{cfg,
                replication,
                0,
                fading_correlation(cfg.radio),
                {},
                {},
                {},
                {},
                {},
                RandomStream(derive_seed(rep_seed, 2)),
                RandomStream(derive_seed(rep_seed, 3)),
                RandomStream(derive_seed(rep_seed, 4)),
                RandomStream(derive_seed(rep_seed, 5))};

        RandomStream topo_rng(derive_seed(rep_seed, 1));
        std::vector<Vec2> sus = cfg.su_positions;
        if (sus.empty()) {
            sus.reserve(cfg.num_sus);
            for (std::uint32_t i = 0; i < cfg.num_sus; ++i)
                sus.push_back(Vec2{topo_rng.uniform(0.0, cfg.area_side),
                                   topo_rng.uniform(0.0, cfg.area_side)});
        }
        const Vec2 bs = cfg.bs_position
                            ? *cfg.bs_position
                            : Vec2{cfg.area_side / 2 + cfg.bs_distance, cfg.area_side / 2};
        w.topology = Topology::from_positions(sus, bs, cfg.radio.pathloss_exponent);

        std::vector<double> pu(cfg.num_channels);
        for (std::size_t k = 0; k < pu.size(); ++k) pu[k] = cfg.pu_prob_for(k);
        w.channels = ChannelState::init(cfg.num_sus, cfg.num_channels, std::move(pu),
                                        w.fading_rng);

        w.policies.resize(cfg.num_sus);
        w.ledgers.resize(cfg.num_sus);
        w.regrets.resize(cfg.num_sus);
        for (std::uint32_t i = 0; i < cfg.num_sus; ++i) {
            w.policies[i] = cfg.strategy_for(i);
            AgentLedger& led = w.ledgers[i];
            led.reward = 1.0;
            led.cost = 1.0;
            led.alpha = cfg.alpha;
            led.threshold = 0.0;
            if (w.policies[i] == Policy::Threshold || w.policies[i] == Policy::Nrl) {
                const double c1 = cfg.entry_fee_at(0);
                const double e1 = cfg.monitor_fee_at(0);
                const auto F = make_rayleigh_rate_cdf(w.topology.pathloss_gain[i], cfg.radio);
                if (cfg.num_sus >= 2) {
                    led.threshold =
                        initial_threshold(c1, e1, static_cast<int>(cfg.num_sus), F);
                } else {
                    led.threshold = std::min(e1 / (1.0 + c1), F.support_max);
                }
            }
            if (w.policies[i] == Policy::Nrl)
                w.regrets[i] = RegretState::init(cfg.num_channels, cfg.nu, cfg.kappa_init);
        }
        return w;
    }

    StepResult step() {
        const std::size_t n = cfg.num_sus;
        const std::size_t k = cfg.num_channels;
        const Fees fees{cfg.entry_fee_at(slot), cfg.monitor_fee_at(slot)};

        step_fading(channels, fading_rho, fading_rng);
        step_pu(channels, pu_rng);
        for (const PuWindow& w : cfg.pu_windows) {
            if (slot < w.begin || slot >= w.end) continue;
            if (w.channel < 0)
                std::fill(channels.pu_active.begin(), channels.pu_active.end(),
                          std::uint8_t{1});
            else
                channels.pu_active[static_cast<std::size_t>(w.channel)] = 1;
        }

        std::vector<double> vals(n * k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t ch = 0; ch < k; ++ch)
                vals[i * k + ch] = rate(topology.pathloss_gain[i], channels.h(i, ch), cfg.radio);

        std::vector<AgentAction> actions(n, AgentAction::stay_out());
        std::vector<std::int32_t> monitored(n, -1);
        std::vector<std::size_t> ga_ids;
        for (std::size_t i = 0; i < n; ++i) {
            const std::span<const double> row(vals.data() + i * k, k);
            switch (policies[i]) {
                case Policy::Myopic:
                case Policy::Bcb: {
                    const std::int32_t ch = detail::best_free_channel(row, channels.pu_active);
                    if (ch >= 0)
                        actions[i] = AgentAction::bid_on(static_cast<std::size_t>(ch),
                                                         row[static_cast<std::size_t>(ch)]);
                    monitored[i] = ch;
                    break;
                }
                case Policy::Threshold: {
                    const std::int32_t ch = detail::best_free_channel(row, channels.pu_active);
                    if (ch >= 0)
                        actions[i] = threshold_act(ledgers[i], row[static_cast<std::size_t>(ch)],
                                                   static_cast<std::size_t>(ch), fees);
                    monitored[i] = ch;
                    break;
                }
                case Policy::Nrl: {
                    const std::size_t ch = select_channel(regrets[i], choice_rng);
                    regrets[i].current_channel = static_cast<std::int32_t>(ch);
                    if (!channels.pu_active[ch])
                        actions[i] = threshold_act(ledgers[i], row[ch], ch, fees);
                    monitored[i] = static_cast<std::int32_t>(ch);
                    break;
                }
                case Policy::Ga:
                    ga_ids.push_back(i);
                    break;
            }
        }
        if (!ga_ids.empty()) {
            std::vector<double> sub(ga_ids.size() * k);
            for (std::size_t r = 0; r < ga_ids.size(); ++r)
                for (std::size_t ch = 0; ch < k; ++ch)
                    sub[r * k + ch] = vals[ga_ids[r] * k + ch];
            const auto assigned = ga_assign(sub, ga_ids.size(), k, channels.pu_active);
            for (std::size_t r = 0; r < ga_ids.size(); ++r) {
                const std::size_t i = ga_ids[r];
                if (assigned[r] >= 0) {
                    const auto ch = static_cast<std::size_t>(assigned[r]);
                    actions[i] = AgentAction::bid_on(ch, vals[i * k + ch]);
                }
                monitored[i] = assigned[r];
            }
        }

        AuctionRound round;
        round.slot = slot;
        round.actions = actions;
        round.pu_active = channels.pu_active;
        round.rule = cfg.auction_rule;
        round.winner = allocate(round.actions, round.pu_active, tie_rng);
        round.payment = settle(round.actions, round.winner, round.rule);
        const Broadcast bc = publish(round);

        const double monitor_total =
            fees.monitor_e * (cfg.monitor_fee_per_channel ? static_cast<double>(k) : 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const AgentAction& a = actions[i];
            const bool won =
                a.is_bid() && round.won(i, static_cast<std::size_t>(a.channel));
            const double pay =
                won ? round.payment[static_cast<std::size_t>(a.channel)] : 0.0;
            ledgers[i].cost += monitor_total + (a.is_bid() ? fees.entry_c : 0.0) + pay;
            if (won) ledgers[i].reward += vals[i * k + static_cast<std::size_t>(a.channel)];

            if (policies[i] == Policy::Threshold || policies[i] == Policy::Nrl) {
                if (monitored[i] >= 0)
                    threshold_update(ledgers[i], a.is_bid(), won,
                                     bc[static_cast<std::size_t>(monitored[i])]);
            }
            if (policies[i] == Policy::Nrl) {
                WindowSlot ws;
                ws.valuations.assign(vals.begin() + static_cast<std::ptrdiff_t>(i * k),
                                     vals.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
                ws.chosen = monitored[i];
                ws.did_bid = a.is_bid();
                ws.won = won;
                ws.broadcast = bc;
                push_window(regrets[i], ws);
                regret_update(regrets[i]);
                probability_update(regrets[i]);
            }
        }

        ++slot;
        return StepResult{std::move(round), bc, std::move(vals), std::move(monitored)};
    }
};

// Per-slot traces of one replication, slot-major with num_sus entries per
// slot.
struct MetricsSeries {
    std::size_t num_sus = 0;
    std::vector<double> gamma;
    std::vector<double> bid;
    std::vector<std::uint8_t> did_bid;
    std::vector<double> payment;
    std::vector<double> jain;

    std::size_t slots() const { return jain.size(); }
    double gamma_at(std::size_t slot, std::size_t su) const {
        return gamma[slot * num_sus + su];
    }
    double final_gamma(std::size_t su) const { return gamma_at(slots() - 1, su); }
    double final_jain() const { return jain.back(); }
};

inline MetricsSeries run(const ScenarioConfig& cfg, std::uint32_t replication) {
    World w = World::create(cfg, replication);
    const std::size_t n = cfg.num_sus;
    MetricsSeries m;
    m.num_sus = n;
    m.gamma.reserve(cfg.horizon * n);
    m.bid.reserve(cfg.horizon * n);
    m.did_bid.reserve(cfg.horizon * n);
    m.payment.reserve(cfg.horizon * n);
    m.jain.reserve(cfg.horizon);
    std::vector<double> row(n);
    for (std::uint64_t t = 0; t < cfg.horizon; ++t) {
        const StepResult sr = w.step();
        for (std::size_t i = 0; i < n; ++i) {
            const AgentAction& a = sr.round.actions[i];
            const bool won =
                a.is_bid() && sr.round.won(i, static_cast<std::size_t>(a.channel));
            row[i] = utility(w.ledgers[i]);
            m.gamma.push_back(row[i]);
            m.bid.push_back(a.is_bid() ? a.bid : 0.0);
            m.did_bid.push_back(a.is_bid() ? 1 : 0);
            m.payment.push_back(won ? sr.round.payment[static_cast<std::size_t>(a.channel)]
                                    : 0.0);
        }
        m.jain.push_back(jain_fairness(row));
    }
    return m;
}

}  // namespace specbid
