/**
 * @file series.hpp
 * @brief Seat-swapped match series, parameter sweeps and throughput benchmarks.
 *
 * Match i of a series runs with sub-seed mix_seed(seed, i); agents are seeded from that and
 * their seat, so an iteration-budget series is reproducible bit for bit regardless of the
 * worker count. Seats rotate: agent a sits at seat (a + i) mod k. When two agents meet in a
 * k-player game, the first takes seat i mod k and the second fills the remaining seats with
 * independent instances.
 */
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "gpn/games/registry.hpp"
#include "gpn/random.hpp"
#include "gpn/tournament/agent.hpp"
#include "gpn/tournament/agent_spec.hpp"
#include "gpn/tournament/stats.hpp"

namespace gpn::tournament {

struct MatchRecord {
    std::size_t index = 0;
    std::string game;
    std::uint64_t seed = 0;
    std::vector<int> seats;  // agent index sitting at each player seat
    std::optional<PlayerId> winner_seat;
    std::optional<int> winner_agent;
    std::vector<double> utilities;  // per seat
    int plies = 0;
    std::vector<std::uint64_t> iterations;  // per move, in play order
    std::vector<std::string> moves;

    /// Score of agent `a`: its utility at the first seat it occupies.
    double score_of(int a) const {
        for (std::size_t s = 0; s < seats.size(); ++s)
            if (seats[s] == a) return utilities[s];
        return 0.0;
    }
};

struct SeriesConfig {
    std::string game = "tictactoe";
    std::vector<AgentSpec> agents;
    int games = 2;
    mcts::SearchBudget budget = mcts::SearchBudget::iterations(1000);
    std::uint64_t seed = 1;
    int workers = 1;
};

struct SeriesResult {
    SeriesSummary summary;  // for agents[0]
    std::vector<MatchRecord> matches;
    std::vector<std::string> warnings;
};

class SeriesError : public std::runtime_error {
public:
    SeriesError(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

/// Seat layout of match `index`: agent index per seat.
inline std::vector<int> seat_layout(std::size_t agents, int players, std::size_t index) {
    std::vector<int> seats(static_cast<std::size_t>(players), 1);
    const auto k = static_cast<std::size_t>(players);
    if (agents == k) {
        for (std::size_t a = 0; a < agents; ++a) seats[(a + index) % k] = static_cast<int>(a);
    } else {
        seats[index % k] = 0;
    }
    return seats;
}

template <Game G>
MatchRecord play_match(const G& game, std::span<const AgentSpec> specs, const mcts::SearchBudget& budget,
                       std::size_t index, std::uint64_t seed) {
    MatchRecord rec;
    rec.index = index;
    rec.game = game.name();
    rec.seed = mix_seed(seed, index);
    rec.seats = seat_layout(specs.size(), game.num_players(), index);

    std::vector<std::unique_ptr<Agent<G>>> agents;
    for (std::size_t s = 0; s < rec.seats.size(); ++s)
        agents.push_back(make_agent(specs[static_cast<std::size_t>(rec.seats[s])], game, mix_seed(rec.seed, s)));

    auto state = game.initial_state();
    while (!game.is_terminal(state)) {
        if (rec.plies > game.max_plies()) throw std::logic_error(game.name() + ": game exceeded its ply bound");
        auto& agent = *agents[static_cast<std::size_t>(game.mover(state))];
        const auto move = agent.choose(state, budget);
        rec.iterations.push_back(agent.last_iterations());
        rec.moves.push_back(game.move_string(move));
        state = game.apply(state, move);
        for (auto& a : agents) a->observe(move);
        ++rec.plies;
    }
    const auto outcome = game.outcome(state);
    rec.utilities = outcome.utilities;
    rec.winner_seat = outcome.winner;
    if (outcome.winner) rec.winner_agent = rec.seats[static_cast<std::size_t>(*outcome.winner)];
    return rec;
}

inline SeriesSummary summarize_matches(std::span<const MatchRecord> matches, int agent = 0) {
    std::vector<double> scores;
    for (const auto& m : matches) scores.push_back(m.score_of(agent));
    return summarize(scores);
}

inline SeriesResult run_series(const SeriesConfig& cfg) {
    if (cfg.games < 1) throw ConfigError("games must be at least 1");
    if (cfg.agents.size() < 2) throw ConfigError("a series needs at least two agents");
    if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
    if (cfg.budget.mode() == mcts::SearchBudget::Mode::iterations && cfg.budget.max_iterations() == 0)
        throw ConfigError("iteration budget must be positive");
    if (cfg.budget.mode() == mcts::SearchBudget::Mode::time && cfg.budget.time_per_move().count() <= 0)
        throw ConfigError("time budget must be positive");

    games::AnyGame any;
    try {
        any = games::make_game(cfg.game);
    } catch (const games::GameSpecError& e) {
        throw ConfigError(e.what());
    }

    return std::visit([&](const auto& game) {
        const int players = game.num_players();
        if (cfg.agents.size() != 2 && cfg.agents.size() != static_cast<std::size_t>(players))
            throw ConfigError("need 2 or " + std::to_string(players) + " agents for " + game.name());

        SeriesResult result;
        if (players == 2 && cfg.games % 2 != 0)
            result.warnings.push_back("odd number of games: seats are not exactly balanced");

        const auto n = static_cast<std::size_t>(cfg.games);
        result.matches.resize(n);
        std::vector<std::exception_ptr> errors(n);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};

        auto worker = [&] {
            while (!failed.load()) {
                const auto i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    result.matches[i] = play_match(game, cfg.agents, cfg.budget, i, cfg.seed);
                } catch (...) {
                    errors[i] = std::current_exception();
                    failed.store(true);
                }
            }
        };
        const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), n);
        if (workers == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        }

        for (std::size_t i = 0; i < n; ++i) {
            if (!errors[i]) continue;
            std::string what = "unknown error";
            try {
                std::rethrow_exception(errors[i]);
            } catch (const std::exception& e) {
                what = e.what();
            } catch (...) {
            }
            throw SeriesError("match " + std::to_string(i) + " failed (seed " + std::to_string(mix_seed(cfg.seed, i)) +
                                  "): " + what,
                              mix_seed(cfg.seed, i));
        }
        result.summary = summarize_matches(result.matches);
        return result;
    }, any);
}

struct SweepCell {
    std::string value;
    SeriesSummary summary;
};

/// Runs one series per value of `param` applied to agents[0].
inline std::vector<SweepCell> run_sweep(const SeriesConfig& base, const std::string& param,
                                        const std::vector<std::string>& values) {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    if (base.agents.empty()) throw ConfigError("sweep needs agents");
    // Validate every value before any game starts.
    for (const auto& v : values) {
        AgentSpec probe = base.agents.front();
        probe.set(param, v);
    }
    std::vector<SweepCell> table;
    for (const auto& v : values) {
        SeriesConfig cfg = base;
        cfg.agents.front().set(param, v);
        table.push_back({v, run_series(cfg).summary});
    }
    return table;
}

struct Throughput {
    double iterations_per_second = 0.0;
    std::uint64_t iterations = 0;
    double seconds = 0.0;
};

/// Iterations per second from the initial position: one warm-up search, then repeated fresh
/// searches of `per_move` each until `seconds` have been measured.
inline Throughput bench_throughput(const std::string& game_spec, const AgentSpec& spec, double seconds,
                                   std::chrono::milliseconds per_move = std::chrono::milliseconds(1000),
                                   std::uint64_t seed = 1,
                                   std::chrono::milliseconds warmup = std::chrono::milliseconds(1000)) {
    using clock = std::chrono::steady_clock;
    const auto any = games::make_game(game_spec);
    return std::visit([&](const auto& game) {
        const auto start = game.initial_state();
        const auto budget = mcts::SearchBudget::time(per_move);
        if (warmup.count() > 0) make_agent(spec, game, seed)->choose(start, mcts::SearchBudget::time(warmup));

        Throughput t;
        const auto begin = clock::now();
        std::uint64_t round = 0;
        do {
            auto agent = make_agent(spec, game, mix_seed(seed, ++round));
            if (spec.kind == AgentKind::random) {
                // Count random playouts as iterations.
                Rng rng(mix_seed(seed, round));
                const auto deadline = clock::now() + per_move;
                while (clock::now() < deadline) {
                    mcts::simulate(game, start, rng);
                    ++t.iterations;
                }
            } else {
                agent->choose(start, budget);
                t.iterations += agent->last_iterations();
            }
        } while (std::chrono::duration<double>(clock::now() - begin).count() < seconds);
        t.seconds = std::chrono::duration<double>(clock::now() - begin).count();
        t.iterations_per_second = static_cast<double>(t.iterations) / t.seconds;
        return t;
    }, any);
}

}  // namespace gpn::tournament
