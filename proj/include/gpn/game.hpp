/**
 * @file game.hpp
 * @brief The abstract game interface every search algorithm is written against.
 *
 * A game is a stateless rules object (it may carry board parameters) operating on
 * immutable-by-convention `State` values. Implementations derive from `GameBase` via CRTP
 * and provide:
 *   - `int num_players() const`
 *   - `State initial_state() const`
 *   - `void legal_moves(const State&, std::vector<Move>&) const` (deterministic order)
 *   - `void play(State&, const Move&) const` (unchecked, in place)
 *   - `bool is_terminal(const State&) const`
 *   - `PlayerId mover(const State&) const`
 *   - `std::optional<PlayerId> winner(const State&) const` (terminal states only)
 *   - `std::string key(const State&) const` (injective position key, used for memoization)
 *   - `std::string name() const`, `std::string move_string(const Move&) const`
 *   - `int max_plies() const` (hard bound on game length)
 */
#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpn {

using PlayerId = int;

class IllegalMoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotTerminalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Final result of a game. Utilities are in [0,1]: win 1, loss 0, draw 0.5 for everyone.
struct Outcome {
    std::vector<double> utilities;
    std::optional<PlayerId> winner;

    static Outcome win(int num_players, PlayerId p) {
        Outcome o{std::vector<double>(static_cast<std::size_t>(num_players), 0.0), p};
        o.utilities[static_cast<std::size_t>(p)] = 1.0;
        return o;
    }
    static Outcome draw(int num_players) {
        return Outcome{std::vector<double>(static_cast<std::size_t>(num_players), 0.5), std::nullopt};
    }

    bool operator==(const Outcome&) const = default;
};

template <class G>
concept Game = requires(const G& g, typename G::State& s, const typename G::State& cs,
                        const typename G::Move& m, std::vector<typename G::Move>& out) {
    typename G::State;
    typename G::Move;
    { g.num_players() } -> std::convertible_to<int>;
    { g.initial_state() } -> std::same_as<typename G::State>;
    g.legal_moves(cs, out);
    g.play(s, m);
    { g.is_terminal(cs) } -> std::convertible_to<bool>;
    { g.mover(cs) } -> std::convertible_to<PlayerId>;
    { g.winner(cs) } -> std::convertible_to<std::optional<PlayerId>>;
    { g.key(cs) } -> std::convertible_to<std::string>;
    { g.name() } -> std::convertible_to<std::string>;
    { g.move_string(m) } -> std::convertible_to<std::string>;
    { g.max_plies() } -> std::convertible_to<int>;
    requires std::equality_comparable<typename G::Move>;
};

template <class G>
using StateOf = typename G::State;
template <class G>
using MoveOf = typename G::Move;

/// Checked operations shared by every game.
template <class Derived>
class GameBase {
public:
    template <class State>
    auto legal_moves(const State& s) const {
        std::vector<typename Derived::Move> out;
        self().legal_moves(s, out);
        return out;
    }

    template <class State, class Move>
    bool is_legal(const State& s, const Move& m) const {
        if (self().is_terminal(s)) return false;
        const auto moves = legal_moves(s);
        return std::find(moves.begin(), moves.end(), m) != moves.end();
    }

    /// Successor of `s` after `m`; throws IllegalMoveError unless m is legal in s.
    template <class State, class Move>
    State apply(const State& s, const Move& m) const {
        if (!is_legal(s, m))
            throw IllegalMoveError(self().name() + ": illegal move " + self().move_string(m));
        State next = s;
        self().play(next, m);
        return next;
    }

    template <class State>
    Outcome outcome(const State& s) const {
        if (!self().is_terminal(s)) throw NotTerminalError(self().name() + ": outcome of non-terminal state");
        const auto w = self().winner(s);
        return w ? Outcome::win(self().num_players(), *w) : Outcome::draw(self().num_players());
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace gpn
