// Test-only helpers: position samplers, tree walkers and a naive (unmemoized) reference
// solver that shares no code with gpn/oracle.hpp.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/random.hpp"

namespace gpn::testing {

/// Plays `plies` uniformly random moves from the initial position (stopping at terminals).
template <Game G>
StateOf<G> random_position(const G& game, Rng& rng, int plies) {
    auto s = game.initial_state();
    for (int i = 0; i < plies && !game.is_terminal(s); ++i) {
        const auto moves = game.legal_moves(s);
        s = game.apply(s, moves[uniform_index(rng, moves.size())]);
    }
    return s;
}

/// Samples `count` non-terminal positions reached by random play of random length.
template <Game G>
std::vector<StateOf<G>> sample_positions(const G& game, std::uint64_t seed, int count, int max_plies) {
    Rng rng(seed);
    std::vector<StateOf<G>> out;
    while (static_cast<int>(out.size()) < count) {
        const int plies = static_cast<int>(uniform_index(rng, static_cast<std::size_t>(max_plies) + 1));
        auto s = random_position(game, rng, plies);
        if (!game.is_terminal(s)) out.push_back(std::move(s));
    }
    return out;
}

template <class Node, class F>
void for_each_node(Node& root, F&& f) {
    std::vector<Node*> stack{&root};
    while (!stack.empty()) {
        Node* n = stack.back();
        stack.pop_back();
        f(*n);
        for (auto& c : n->children) stack.push_back(c.get());
    }
}

/// Naive minimax value of player `p` where p maximizes and, when `coalition`, all others
/// minimize; otherwise everyone maximizes p's utility.
template <Game G>
double naive_value(const G& game, const StateOf<G>& s, PlayerId p, bool coalition) {
    if (game.is_terminal(s)) return game.outcome(s).utilities[static_cast<std::size_t>(p)];
    const bool maximize = !coalition || game.mover(s) == p;
    double best = maximize ? -1.0 : 2.0;
    for (const auto& m : game.legal_moves(s)) {
        const double v = naive_value(game, game.apply(s, m), p, coalition);
        best = maximize ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

}  // namespace gpn::testing
