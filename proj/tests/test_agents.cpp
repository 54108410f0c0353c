#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <deque>
#include <vector>

#include <specbid/agents.hpp>
#include <specbid/random.hpp>

using namespace specbid;

namespace {

WindowSlot make_slot(std::vector<double> valuations, std::int32_t chosen, bool did_bid,
                     bool won, Broadcast broadcast) {
    WindowSlot s;
    s.valuations = std::move(valuations);
    s.chosen = chosen;
    s.did_bid = did_bid;
    s.won = won;
    s.broadcast = std::move(broadcast);
    return s;
}

ChannelBroadcast outcome(double max_bid, double payment) {
    ChannelBroadcast b;
    b.max_bid = max_bid;
    b.payment = payment;
    return b;
}

}  // namespace

TEST_CASE("myopic bids its valuation unconditionally") {
    const std::vector<double> vals{4.2};
    const AgentAction a = myopic_act(vals, 0);
    CHECK(a.bids_on(0));
    CHECK(a.bid == 4.2);
    const std::vector<double> zero{0.0};
    CHECK(myopic_act(zero, 0).is_bid());
    CHECK(myopic_act(zero, 0).bid == 0.0);
}

TEST_CASE("threshold rule compares staying out against the bid estimate") {
    AgentLedger led;  // r = c = 1
    led.threshold = 3.0;
    const Fees fees{10.0, 1.0};

    // theta = theta_bar: a = 0.5, b = 1/12, stay out.
    CHECK_FALSE(threshold_act(led, 3.0, 0, fees).is_bid());
    // theta = theta_bar + 100: b = 101/12 > 0.5, bid.
    const AgentAction bid = threshold_act(led, 103.0, 0, fees);
    CHECK(bid.bids_on(0));
    CHECK(bid.bid == 103.0);
    // Exact boundary a == b participates.
    led.threshold = 0.0;
    CHECK(threshold_act(led, 5.0, 0, fees).is_bid());
}

TEST_CASE("threshold update fires on the observed-payment branches") {
    const Fees fees{10.0, 1.0};
    AgentLedger led;
    led.threshold = 10.0;
    led.alpha = 0.05;

    SECTION("stay-out below threshold pulls it down") {
        threshold_update(led, false, false, outcome(2.0, 2.0));
        CHECK(led.threshold == Catch::Approx(9.6));
    }
    SECTION("stay-out above threshold leaves it alone") {
        threshold_update(led, false, false, outcome(12.0, 12.0));
        CHECK(led.threshold == 10.0);
    }
    SECTION("losing a bid always updates") {
        threshold_update(led, true, false, outcome(12.0, 12.0));
        CHECK(led.threshold == Catch::Approx(0.05 * 12.0 + 0.95 * 10.0));
    }
    SECTION("winning updates only at payments at or above threshold") {
        threshold_update(led, true, true, outcome(11.0, 4.0));
        CHECK(led.threshold == 10.0);
        threshold_update(led, true, true, outcome(15.0, 11.0));
        CHECK(led.threshold == Catch::Approx(0.05 * 11.0 + 0.95 * 10.0));
    }
    SECTION("alpha = 1 replaces the threshold outright") {
        led.alpha = 1.0;
        threshold_update(led, true, false, outcome(7.0, 7.0));
        CHECK(led.threshold == 7.0);
    }
    SECTION("no published payment means no update") {
        threshold_update(led, false, false, ChannelBroadcast{});
        CHECK(led.threshold == 10.0);
    }
}

TEST_CASE("counterfactual reward credits beatable channels") {
    std::deque<WindowSlot> window;
    CHECK(counterfactual_reward(window, 0) == 0.0);

    // Another SU's bid of 3 on the alternative; own valuation there is 5.
    window.push_back(make_slot({1.0, 5.0}, 0, true, false,
                               {outcome(8.0, 8.0), outcome(3.0, 3.0)}));
    CHECK(counterfactual_reward(window, 1) == 5.0);

    // A primary user on the alternative voids the credit.
    Broadcast pu_bc{outcome(8.0, 8.0), ChannelBroadcast{}};
    pu_bc[1].pu = true;
    window.clear();
    window.push_back(make_slot({1.0, 5.0}, 0, true, false, pu_bc));
    CHECK(counterfactual_reward(window, 1) == 0.0);

    // An unbeatable opposing bid gives nothing.
    window.clear();
    window.push_back(make_slot({1.0, 5.0}, 0, true, false,
                               {outcome(8.0, 8.0), outcome(6.0, 6.0)}));
    CHECK(counterfactual_reward(window, 1) == 0.0);

    // Own winning bid is replaced by the runner-up price.
    window.clear();
    window.push_back(make_slot({1.0, 5.0}, 1, true, true,
                               {ChannelBroadcast{}, outcome(5.0, 2.0)}));
    CHECK(counterfactual_reward(window, 1) == 5.0);

    // An empty channel is free for the taking.
    window.clear();
    window.push_back(make_slot({1.0, 5.0}, 0, true, false,
                               {outcome(8.0, 8.0), ChannelBroadcast{}}));
    CHECK(counterfactual_reward(window, 1) == 5.0);
}

TEST_CASE("realized reward sums won slots only") {
    std::deque<WindowSlot> window;
    window.push_back(make_slot({2.0, 5.0}, 1, true, true, {}));
    window.push_back(make_slot({3.0, 4.0}, 0, true, false, {}));
    window.push_back(make_slot({6.0, 1.0}, 0, true, true, {}));
    CHECK(realized_window_reward(window) == 11.0);
}

TEST_CASE("window is bounded by nu") {
    RegretState s = RegretState::init(2, 10, 1.0);
    for (int i = 0; i < 25; ++i)
        push_window(s, make_slot({1.0, 1.0}, 0, false, false,
                                 {ChannelBroadcast{}, ChannelBroadcast{}}));
    CHECK(s.window.size() == 10);
    CHECK_THROWS_AS(RegretState::init(0, 10, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RegretState::init(2, 0, 1.0), std::invalid_argument);
}

TEST_CASE("regret averages counterfactual advantage over the window") {
    RegretState s = RegretState::init(2, 10, 1.0);
    CHECK_THROWS_AS(regret_update(s), std::invalid_argument);

    // One buffered slot: lost on channel 0, channel 1 empty and worth 20.
    push_window(s, make_slot({1.0, 20.0}, 0, true, false,
                             {outcome(8.0, 8.0), ChannelBroadcast{}}));
    s.current_channel = 0;
    regret_update(s);
    CHECK(s.regret[0 * 2 + 1] == Catch::Approx(2.0));  // (20 - 0) / 10

    // Realized reward catching up to the counterfactual zeroes the regret.
    RegretState t = RegretState::init(2, 10, 1.0);
    push_window(t, make_slot({5.0, 5.0}, 0, true, true,
                             {outcome(5.0, 0.0), outcome(4.0, 4.0)}));
    t.current_channel = 0;
    regret_update(t);
    CHECK(t.regret[0 * 2 + 1] == 0.0);  // 5 - 5, clamped at 0
}

TEST_CASE("selection probabilities follow the regret-matching formula") {
    RegretState s = RegretState::init(2, 10, 4.0);
    s.current_channel = 0;

    SECTION("zero regrets keep the point mass on the current channel") {
        probability_update(s);
        CHECK(s.prob == std::vector<double>{1.0, 0.0});
    }
    SECTION("R = 1 with kappa = 4 splits 0.75 / 0.25") {
        s.regret = {0.0, 1.0, 0.0, 0.0};
        s.max_regret_seen = 1.0;
        probability_update(s);
        CHECK(s.prob[1] == Catch::Approx(0.25));
        CHECK(s.prob[0] == Catch::Approx(0.75));
    }
    SECTION("huge kappa collapses toward the current channel") {
        s.kappa = 1e12;
        s.regret = {0.0, 1.0, 0.0, 0.0};
        s.max_regret_seen = 1.0;
        probability_update(s);
        CHECK(s.prob[0] > 1.0 - 1e-11);
    }
    SECTION("kappa doubles when the off-channel mass overflows") {
        RegretState big = RegretState::init(3, 10, 1.0);
        big.current_channel = 0;
        big.regret = {0.0, 0.8, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        big.max_regret_seen = 0.0;
        probability_update(big);
        CHECK(big.kappa == 2.0);
        CHECK(big.prob[0] == Catch::Approx(0.2));
        CHECK(big.prob[1] == Catch::Approx(0.4));
        CHECK(big.prob[2] == Catch::Approx(0.4));
    }
}

TEST_CASE("channel selection follows the distribution") {
    RegretState s = RegretState::init(2, 10, 1.0);
    RandomStream rng(61);

    s.prob = {1.0, 0.0};
    for (int i = 0; i < 100; ++i) REQUIRE(select_channel(s, rng) == 0);

    s.prob = {0.5, 0.5};
    int zeros = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) zeros += select_channel(s, rng) == 0 ? 1 : 0;
    CHECK(std::abs(zeros / static_cast<double>(n) - 0.5) < 0.01);
}

TEST_CASE("best-channel bidding takes the argmax with low-index ties") {
    CHECK(bcb_act(std::vector<double>{3.0, 7.0}) == 1);
    CHECK(bcb_act(std::vector<double>{7.0, 7.0}) == 0);
    CHECK(bcb_act(std::vector<double>{5.0}) == 0);
    CHECK_THROWS_AS(bcb_act(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("genie assignment maximizes the total and respects primary users") {
    const std::vector<std::uint8_t> free2{0, 0};
    CHECK(ga_assign({5, 1, 4, 3}, 2, 2, free2) == std::vector<std::int32_t>{0, 1});
    CHECK(ga_assign({2, 9}, 1, 2, free2) == std::vector<std::int32_t>{1});

    const std::vector<std::uint8_t> blocked{1, 1};
    CHECK(ga_assign({5, 1, 4, 3}, 2, 2, blocked) == std::vector<std::int32_t>{-1, -1});

    // Only channel 1 open: the better SU there gets it, the other stays out.
    const std::vector<std::uint8_t> half{1, 0};
    CHECK(ga_assign({5, 1, 4, 3}, 2, 2, half) == std::vector<std::int32_t>{-1, 1});

    CHECK_THROWS_AS(ga_assign({1, 2, 3}, 2, 2, free2), std::invalid_argument);
}

TEST_CASE("counterfactual reward matches an allocation replay oracle") {
    RandomStream rng(62);
    RandomStream tie_rng(63);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(4);
        const std::size_t k = 1 + rng.uniform_index(3);
        std::vector<std::uint8_t> pu(k);
        for (auto& x : pu) x = rng.bernoulli(0.2) ? 1 : 0;

        std::vector<double> own_vals(k);
        for (double& v : own_vals) v = rng.uniform(0.0, 10.0);

        std::vector<AgentAction> actions(n);
        for (std::size_t i = 1; i < n; ++i)
            if (rng.bernoulli(0.75))
                actions[i] = AgentAction::bid_on(rng.uniform_index(k), rng.uniform(0.0, 10.0));
        const bool own_bids = rng.bernoulli(0.75);
        const std::size_t own_ch = rng.uniform_index(k);
        if (own_bids && !pu[own_ch]) actions[0] = AgentAction::bid_on(own_ch, own_vals[own_ch]);

        AuctionRound round;
        round.actions = actions;
        round.pu_active = pu;
        round.rule = AuctionRule::SecondPrice;
        round.winner = allocate(round.actions, round.pu_active, tie_rng);
        round.payment = settle(round.actions, round.winner, round.rule);

        std::deque<WindowSlot> window;
        const bool won = actions[0].is_bid() &&
                         round.winner[static_cast<std::size_t>(actions[0].channel)] == 0;
        window.push_back(make_slot(own_vals,
                                   actions[0].is_bid() ? actions[0].channel : -1,
                                   actions[0].is_bid(), won, publish(round)));

        for (std::size_t alt = 0; alt < k; ++alt) {
            // Replay with the agent's action replaced by a bid on alt.
            std::vector<AgentAction> replayed = actions;
            replayed[0] = AgentAction::bid_on(alt, own_vals[alt]);
            const auto winner2 = allocate(replayed, pu, tie_rng);
            const double expected =
                winner2[alt] == 0 && !pu[alt] ? own_vals[alt] : 0.0;
            REQUIRE(counterfactual_reward(window, alt) == expected);
        }
    }
}
