/**
 * @file oracle.hpp
 * @brief Exhaustive ground-truth solvers for small games.
 *
 * Three value notions are computed per player p, each by full-depth search with
 * memoization on the position key:
 *   - paranoid value: p maximizes its own utility while every other player minimizes it.
 *     `paranoid_win(s, p)` holds iff this value is 1, i.e. p forces a win against any coalition.
 *   - optimistic value: every player maximizes p's utility. `optimistic_win(s, p)` holds iff
 *     some line of play ends in a win for p.
 *   - exact value (two players only): the minimax utility vector under optimal play.
 *
 * Any sound lower bound on what p can guarantee is <= the paranoid value, and any sound upper
 * bound on what p could ever get is >= the optimistic value.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpn/game.hpp"

namespace gpn {

class OracleBudgetExceeded : public std::runtime_error {
public:
    explicit OracleBudgetExceeded(std::size_t cap)
        : std::runtime_error("oracle node cap of " + std::to_string(cap) + " positions exceeded"), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

struct OracleVerdict {
    std::vector<bool> paranoid_win;
    std::vector<bool> optimistic_win;
    std::optional<std::vector<double>> exact_value;  // two-player games only
};

template <Game G>
class Oracle {
public:
    using State = StateOf<G>;
    using Move = MoveOf<G>;

    static constexpr std::size_t kDefaultNodeCap = 20'000'000;

    explicit Oracle(const G& game, std::size_t node_cap = kDefaultNodeCap)
        : game_(game), node_cap_(node_cap),
          paranoid_(static_cast<std::size_t>(game.num_players())),
          optimistic_(static_cast<std::size_t>(game.num_players())) {}

    double paranoid_value(const State& s, PlayerId p) { return search(s, p, /*coalition=*/true); }
    double optimistic_value(const State& s, PlayerId p) { return search(s, p, /*coalition=*/false); }

    bool paranoid_win(const State& s, PlayerId p) { return paranoid_value(s, p) == 1.0; }
    bool optimistic_win(const State& s, PlayerId p) { return optimistic_value(s, p) == 1.0; }

    /// Minimax utilities under optimal play; two-player games only.
    std::vector<double> exact_value(const State& s) {
        if (game_.num_players() != 2) throw std::invalid_argument("exact values are defined for two-player games only");
        // In a constant-sum two-player game the opponent minimizing player 0 is optimal play.
        const double v0 = paranoid_value(s, 0);
        return {v0, 1.0 - v0};
    }

    OracleVerdict verdict(const State& s) {
        OracleVerdict v;
        for (PlayerId p = 0; p < game_.num_players(); ++p) {
            v.paranoid_win.push_back(paranoid_win(s, p));
            v.optimistic_win.push_back(optimistic_win(s, p));
        }
        if (game_.num_players() == 2) v.exact_value = exact_value(s);
        return v;
    }

    std::size_t positions() const noexcept { return positions_; }

private:
    using Memo = std::unordered_map<std::string, double>;

    double search(const State& s, PlayerId p, bool coalition) {
        if (game_.is_terminal(s)) return game_.outcome(s).utilities[static_cast<std::size_t>(p)];
        auto& memo = (coalition ? paranoid_ : optimistic_)[static_cast<std::size_t>(p)];
        auto key = game_.key(s);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++positions_ > node_cap_) throw OracleBudgetExceeded(node_cap_);

        const bool maximize = !coalition || game_.mover(s) == p;
        std::vector<Move> moves;
        game_.legal_moves(s, moves);
        double best = maximize ? 0.0 : 1.0;
        for (const auto& m : moves) {
            State next = s;
            game_.play(next, m);
            const double v = search(next, p, coalition);
            best = maximize ? std::max(best, v) : std::min(best, v);
            if ((maximize && best == 1.0) || (!maximize && best == 0.0)) break;
        }
        memo.emplace(std::move(key), best);
        return best;
    }

    G game_;
    std::size_t node_cap_;
    std::size_t positions_ = 0;
    std::vector<Memo> paranoid_;
    std::vector<Memo> optimistic_;
};

template <Game G>
std::vector<double> solve_exact(const G& game, const StateOf<G>& s, std::size_t node_cap = Oracle<G>::kDefaultNodeCap) {
    return Oracle<G>(game, node_cap).exact_value(s);
}

template <Game G>
bool solve_paranoid(const G& game, const StateOf<G>& s, PlayerId p, std::size_t node_cap = Oracle<G>::kDefaultNodeCap) {
    return Oracle<G>(game, node_cap).paranoid_win(s, p);
}

template <Game G>
bool solve_optimistic(const G& game, const StateOf<G>& s, PlayerId p, std::size_t node_cap = Oracle<G>::kDefaultNodeCap) {
    return Oracle<G>(game, node_cap).optimistic_win(s, p);
}

}  // namespace gpn
