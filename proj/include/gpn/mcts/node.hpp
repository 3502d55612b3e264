#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gpn/game.hpp"

namespace gpn::mcts {

/// Tree node. `Extra` carries fields owned by a search extension (empty for plain UCT).
///
/// Invariants maintained by the search:
///  - visits == sum of children's visits + playouts started here (1 for non-root nodes).
///  - 0 <= pess[q] <= opti[q] <= 1 for every player q; terminal nodes have pess == opti == outcome.
template <Game G, class Extra>
struct SearchNode {
    using State = StateOf<G>;
    using Move = MoveOf<G>;

    State state;
    std::optional<Move> move;  // move from the parent; empty at the root
    SearchNode* parent = nullptr;
    PlayerId mover = 0;
    bool terminal = false;

    std::uint64_t visits = 0;
    std::vector<double> score_sums;  // per player

    std::vector<std::unique_ptr<SearchNode>> children;  // in expansion order
    std::vector<Move> untried;

    std::vector<double> pess;  // per-player score bounds
    std::vector<double> opti;

    Extra extra{};

    bool expanded() const noexcept { return !children.empty(); }
    bool fully_expanded() const noexcept { return untried.empty(); }

    /// Mean utility of player p over the playouts through this node.
    double mean(PlayerId p) const { return score_sums[static_cast<std::size_t>(p)] / static_cast<double>(visits); }

    bool solved_for(PlayerId p) const {
        return pess[static_cast<std::size_t>(p)] == opti[static_cast<std::size_t>(p)];
    }

    std::size_t tree_size() const {
        std::size_t n = 1;
        for (const auto& c : children) n += c->tree_size();
        return n;
    }
};

}  // namespace gpn::mcts
