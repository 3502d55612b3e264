/**
 * @file score_bounds.hpp
 * @brief Per-player pessimistic/optimistic score bounds (Score-Bounded MCTS generalized to
 * any number of players).
 *
 * At a node where m moves:
 *   pess[m] = max_c pess_c[m]     opti[m] = max_c opti_c[m]
 *   pess[q] = min_c pess_c[q]     opti[q] = max_c opti_c[q]     for q != m
 * Untried moves count as children with vacuous bounds [0, 1]. These rules hold for any
 * strategy of the other players, so pess[q] never exceeds q's paranoid value and opti[q] is
 * never below q's optimistic value.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace gpn::mcts {

/// Recomputes the bounds of an expanded node from its children. Returns whether any changed.
template <class Node>
bool sb_update(Node& node) {
    if (node.terminal || !node.expanded()) return false;
    const auto players = node.pess.size();
    const auto m = static_cast<std::size_t>(node.mover);
    const bool open = !node.untried.empty();
    bool changed = false;
    for (std::size_t q = 0; q < players; ++q) {
        double pess = q == m ? 0.0 : 1.0;
        double opti = 0.0;
        for (const auto& child : node.children) {
            pess = q == m ? std::max(pess, child->pess[q]) : std::min(pess, child->pess[q]);
            opti = std::max(opti, child->opti[q]);
        }
        if (open) {
            if (q != m) pess = 0.0;
            opti = 1.0;
        }
        if (pess != node.pess[q] || opti != node.opti[q]) {
            node.pess[q] = pess;
            node.opti[q] = opti;
            changed = true;
        }
    }
    return changed;
}

/// Updates `node` and its ancestors until a node's bounds stop changing.
template <class Node>
void sb_propagate(Node* node) {
    for (; node; node = node->parent)
        if (!sb_update(*node)) break;
}

/// Indices of children selection may enter. Children that cannot improve on what the mover
/// already has secured are pruned; at a node solved for its mover, the children realizing
/// the solved value are kept.
template <class Node>
std::vector<std::size_t> sb_filter(const Node& node) {
    const auto m = static_cast<std::size_t>(node.mover);
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        if (node.children[i]->opti[m] > node.pess[m]) eligible.push_back(i);
    if (!eligible.empty()) return eligible;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        const auto& c = *node.children[i];
        if (c.opti[m] == c.pess[m] && c.pess[m] == node.pess[m]) eligible.push_back(i);
    }
    return eligible;
}

}  // namespace gpn::mcts
