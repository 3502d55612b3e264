#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpn/games/registry.hpp"
#include "gpn/oracle.hpp"
#include "gpn/pns.hpp"
#include "gpn/tournament/results_io.hpp"
#include "gpn/tournament/series.hpp"

using namespace gpn;
using namespace gpn::tournament;

namespace {

struct SeriesFlags {
    std::string game = "tictactoe";
    std::string a = "gpn";
    std::string b = "mcts";
    int games = 2;
    long time_ms = 0;
    long iterations = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
};

int default_workers() {
    if (const char* env = std::getenv("GPN_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

void add_series_flags(CLI::App* app, SeriesFlags& f) {
    app->add_option("--game", f.game, "game spec")->capture_default_str();
    app->add_option("--a", f.a, "first agent spec (the one scored)")->capture_default_str();
    app->add_option("--b", f.b, "second agent spec")->capture_default_str();
    app->add_option("--games", f.games, "number of games")->capture_default_str();
    auto* t = app->add_option("--time-ms", f.time_ms, "milliseconds per move");
    auto* i = app->add_option("--iterations", f.iterations, "iterations per move");
    t->excludes(i);
    app->add_option("--seed", f.seed, "series seed")->capture_default_str();
    app->add_option("--workers", f.workers, "parallel matches (default from GPN_WORKERS)")->capture_default_str();
    app->add_option("--out", f.out, "write results JSON here and a summary CSV next to it");
}

SeriesConfig to_config(const SeriesFlags& f) {
    SeriesConfig cfg;
    cfg.game = f.game;
    cfg.agents = {parse_agent_spec(f.a), parse_agent_spec(f.b)};
    cfg.games = f.games;
    if (f.time_ms > 0) cfg.budget = mcts::SearchBudget::time(std::chrono::milliseconds(f.time_ms));
    else if (f.iterations > 0) cfg.budget = mcts::SearchBudget::iterations(static_cast<std::uint64_t>(f.iterations));
    else if (f.time_ms < 0 || f.iterations < 0) throw ConfigError("budgets must be positive");
    cfg.seed = f.seed;
    cfg.workers = f.workers;
    return cfg;
}

std::string csv_path(const std::string& json_path) {
    const auto dot = json_path.rfind('.');
    const auto slash = json_path.rfind('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) return json_path.substr(0, dot) + ".csv";
    return json_path + ".csv";
}

void write_outputs(const std::string& path, const nlohmann::json& j, const std::vector<SweepCell>& table) {
    std::ofstream js(path);
    if (!js) throw std::runtime_error("cannot write " + path);
    js << j.dump(2) << '\n';
    std::ofstream csv(csv_path(path));
    if (!csv) throw std::runtime_error("cannot write " + csv_path(path));
    write_summary_csv(csv, table);
    std::cerr << "wrote " << path << " and " << csv_path(path) << '\n';
}

void print_summary(const std::string& label, const SeriesSummary& s) {
    std::cout << label << ": " << format_win_rate(s) << "  (" << s.wins << " won, " << s.draws << " drawn, " << s.losses
              << " lost, n=" << s.games << ")\n";
}

int run_play(const SeriesFlags& f) {
    const auto cfg = to_config(f);
    const auto r = run_series(cfg);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    print_summary(cfg.agents[0].to_string() + " vs " + cfg.agents[1].to_string() + " on " + cfg.game, r.summary);
    if (!f.out.empty()) write_outputs(f.out, to_json(cfg, r), {{cfg.agents[0].to_string(), r.summary}});
    return 0;
}

int run_sweep_cmd(const SeriesFlags& f, const std::string& param, const std::vector<std::string>& values) {
    const auto cfg = to_config(f);
    const auto table = run_sweep(cfg, param, values);
    for (const auto& cell : table) print_summary(param + "=" + cell.value, cell.summary);
    if (!f.out.empty()) {
        auto j = sweep_to_json(param, table);
        j["game"] = cfg.game;
        j["base"] = cfg.agents[0].to_string();
        j["opponent"] = cfg.agents[1].to_string();
        j["games"] = cfg.games;
        j["seed"] = cfg.seed;
        write_outputs(f.out, j, table);
    }
    return 0;
}

int run_solve(const std::string& spec, PlayerId goal, std::size_t max_nodes, bool mobility) {
    return std::visit([&](const auto& game) {
        if (game.num_players() != 2) throw ConfigError("solve needs a two-player game");
        if (goal < 0 || goal > 1) throw ConfigError("goal must be 0 or 1");
        const auto r = pns::solve(game, game.initial_state(), goal, max_nodes, mobility);
        std::cout << pns::to_string(r.verdict) << " nodes=" << r.nodes << '\n';
        return 0;
    }, games::make_game(spec));
}

int run_oracle(const std::string& spec, std::size_t node_cap) {
    return std::visit([&](const auto& game) {
        Oracle<std::decay_t<decltype(game)>> oracle(game, node_cap);
        const auto v = oracle.verdict(game.initial_state());
        nlohmann::json j;
        j["game"] = game.name();
        j["paranoid_win"] = v.paranoid_win;
        j["optimistic_win"] = v.optimistic_win;
        j["exact_value"] = v.exact_value ? nlohmann::json(*v.exact_value) : nlohmann::json(nullptr);
        j["positions"] = oracle.positions();
        std::cout << j.dump(2) << '\n';
        return 0;
    }, games::make_game(spec));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proof-number guided MCTS: matches, sweeps, benchmarks and solvers"};
    app.footer("games:  " + games::game_spec_help() +
               "\nagents: random | mcts:c=<real>,sb=<bool>,reuse=<bool>"
               "\n        gpn:c=<real>,cpn=<real>,bias=<rank|max|sum>,sb=<bool>,reuse=<bool>,mobility=<bool>"
               "\nGPN_WORKERS sets the default --workers.");
    app.require_subcommand(1);

    SeriesFlags play_flags;
    play_flags.workers = default_workers();
    auto* play = app.add_subcommand("play", "play a seat-swapped series between two agents");
    add_series_flags(play, play_flags);

    SeriesFlags sweep_flags;
    sweep_flags.workers = default_workers();
    std::string param = "cpn";
    std::vector<std::string> values;
    auto* sweep = app.add_subcommand("sweep", "one series per value of an agent parameter of --a");
    add_series_flags(sweep, sweep_flags);
    sweep->add_option("--param", param, "agent parameter to sweep")->capture_default_str();
    sweep->add_option("--values", values, "comma-separated values")->delimiter(',')->required();

    std::string bench_game = "knightthrough:8";
    std::string bench_agent = "mcts";
    double bench_seconds = 5.0;
    long per_move_ms = 1000;
    long warmup_ms = 1000;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "iterations per second from the initial position");
    bench->add_option("--game", bench_game)->capture_default_str();
    bench->add_option("--agent", bench_agent)->capture_default_str();
    bench->add_option("--seconds", bench_seconds, "measured seconds")->capture_default_str();
    bench->add_option("--per-move-ms", per_move_ms)->capture_default_str();
    bench->add_option("--warmup-ms", warmup_ms)->capture_default_str();
    bench->add_option("--seed", bench_seed)->capture_default_str();

    std::string solve_game = "tictactoe";
    PlayerId goal = 0;
    std::size_t max_nodes = 1'000'000;
    bool mobility = false;
    auto* solve = app.add_subcommand("solve", "proof-number search for \"goal forces a win\" from the start");
    solve->add_option("--game", solve_game)->capture_default_str();
    solve->add_option("--goal", goal)->capture_default_str();
    solve->add_option("--max-nodes", max_nodes)->capture_default_str();
    solve->add_flag("--mobility", mobility, "mobility initialization");

    std::string oracle_game = "tictactoe";
    std::size_t node_cap = 20'000'000;
    auto* oracle = app.add_subcommand("oracle", "exhaustive verdict for the start position, as JSON");
    oracle->add_option("--game", oracle_game)->capture_default_str();
    oracle->add_option("--node-cap", node_cap)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) return run_play(play_flags);
        if (*sweep) return run_sweep_cmd(sweep_flags, param, values);
        if (*bench) {
            const auto t = bench_throughput(bench_game, parse_agent_spec(bench_agent), bench_seconds,
                                            std::chrono::milliseconds(per_move_ms), bench_seed,
                                            std::chrono::milliseconds(warmup_ms));
            std::cout << bench_agent << " on " << bench_game << ": " << static_cast<long long>(t.iterations_per_second)
                      << " iterations/s (" << t.iterations << " in " << t.seconds << " s)\n";
            return 0;
        }
        if (*solve) return run_solve(solve_game, goal, max_nodes, mobility);
        if (*oracle) return run_oracle(oracle_game, node_cap);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const games::GameSpecError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const SeriesError& e) {
        std::cerr << "engine error: " << e.what() << '\n';
        return 3;
    } catch (const OracleBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
