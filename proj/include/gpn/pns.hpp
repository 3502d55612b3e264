/**
 * @file pns.hpp
 * @brief Classic two-valued Proof-Number Search over an explicit AND/OR tree.
 *
 * The goal is "player `goal` forces a win". Nodes where `goal` moves are OR nodes, all others
 * are AND nodes. Draws and losses count as disproven. Tree-only; no transposition handling.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/proof_number.hpp"

namespace gpn::pns {

enum class NodeKind { or_node, and_node };

template <Game G>
struct PnsNode {
    StateOf<G> state;
    std::optional<MoveOf<G>> move;
    PnsNode* parent = nullptr;
    NodeKind kind = NodeKind::or_node;
    ProofNumber pn = ProofNumber::one();
    ProofNumber dpn = ProofNumber::one();
    bool terminal = false;
    bool expanded = false;
    std::vector<std::unique_ptr<PnsNode>> children;

    bool solved() const { return pn.is_zero() || dpn.is_zero(); }
};

enum class Verdict { proven, disproven, unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::proven: return "PROVEN";
        case Verdict::disproven: return "DISPROVEN";
        case Verdict::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct SolveResult {
    Verdict verdict = Verdict::unknown;
    std::size_t nodes = 0;
};

/// Unit initialization, or mobility initialization: the AND-side number of an unknown leaf
/// becomes its legal-move count (pn at AND nodes, dpn at OR nodes).
template <class Node>
void init_leaf(Node& leaf, std::size_t legal_move_count, bool mobility) {
    leaf.pn = ProofNumber::one();
    leaf.dpn = ProofNumber::one();
    if (!mobility) return;
    const ProofNumber count(std::max<std::size_t>(legal_move_count, 1));
    if (leaf.kind == NodeKind::and_node) leaf.pn = count;
    else leaf.dpn = count;
}

/// Descends from `root` to the most-proving unexpanded leaf: minimal pn at OR nodes, minimal
/// dpn at AND nodes, first child in move order on ties.
template <class Node>
Node& select_most_proving(Node& root) {
    Node* node = &root;
    while (node->expanded) {
        Node* best = nullptr;
        for (auto& child : node->children) {
            const auto key = node->kind == NodeKind::or_node ? child->pn : child->dpn;
            if (!best || key < (node->kind == NodeKind::or_node ? best->pn : best->dpn)) best = child.get();
        }
        assert(best);
        node = best;
    }
    return *node;
}

/// Recomputes pn/dpn of an expanded node from its children. Returns whether either changed.
template <class Node>
bool set_proof_and_disproof(Node& node) {
    const auto old_pn = node.pn;
    const auto old_dpn = node.dpn;
    ProofNumber min_value = ProofNumber::infinity();
    ProofNumber sum = ProofNumber::zero();
    for (const auto& child : node.children) {
        if (node.kind == NodeKind::or_node) {
            min_value = std::min(min_value, child->pn);
            sum += child->dpn;
        } else {
            min_value = std::min(min_value, child->dpn);
            sum += child->pn;
        }
    }
    if (node.kind == NodeKind::or_node) {
        node.pn = min_value;
        node.dpn = sum;
    } else {
        node.pn = sum;
        node.dpn = min_value;
    }
    return node.pn != old_pn || node.dpn != old_dpn;
}

template <Game G>
class Solver {
public:
    using Node = PnsNode<G>;
    using State = StateOf<G>;
    using Move = MoveOf<G>;

    Solver(const G& game, State root, PlayerId goal, bool mobility = false)
        : game_(game), goal_(goal), mobility_(mobility) {
        root_ = make_node(std::move(root), std::nullopt, nullptr);
    }

    Node& root() { return *root_; }
    const Node& root() const { return *root_; }
    std::size_t nodes() const { return nodes_; }
    PlayerId goal() const { return goal_; }

    Verdict verdict() const {
        if (root_->pn.is_zero()) return Verdict::proven;
        if (root_->dpn.is_zero()) return Verdict::disproven;
        return Verdict::unknown;
    }

    /// Expands every child of `leaf` at once and updates its ancestors, stopping as soon as an
    /// ancestor's numbers are unchanged.
    void expand(Node& leaf) {
        assert(!leaf.expanded && !leaf.terminal);
        std::vector<Move> moves;
        game_.legal_moves(leaf.state, moves);
        for (const auto& m : moves) {
            State next = leaf.state;
            game_.play(next, m);
            leaf.children.push_back(make_node(std::move(next), m, &leaf));
        }
        leaf.expanded = true;
        set_proof_and_disproof(leaf);
        for (Node* node = leaf.parent; node; node = node->parent)
            if (!set_proof_and_disproof(*node)) break;
    }

    /// One most-proving expansion. Requires an unsolved root.
    void step() { expand(select_most_proving(*root_)); }

    SolveResult run(std::size_t max_nodes) {
        while (verdict() == Verdict::unknown && nodes_ < max_nodes) step();
        return {verdict(), nodes_};
    }

private:
    std::unique_ptr<Node> make_node(State s, std::optional<Move> m, Node* parent) {
        auto node = std::make_unique<Node>();
        node->state = std::move(s);
        node->move = std::move(m);
        node->parent = parent;
        node->kind = game_.mover(node->state) == goal_ ? NodeKind::or_node : NodeKind::and_node;
        node->terminal = game_.is_terminal(node->state);
        ++nodes_;
        if (node->terminal) {
            if (game_.winner(node->state) == std::optional<PlayerId>(goal_)) {
                node->pn = ProofNumber::zero();
                node->dpn = ProofNumber::infinity();
            } else {
                node->pn = ProofNumber::infinity();
                node->dpn = ProofNumber::zero();
            }
        } else {
            std::size_t count = 1;
            if (mobility_) {
                std::vector<Move> moves;
                game_.legal_moves(node->state, moves);
                count = moves.size();
            }
            init_leaf(*node, count, mobility_);
        }
        return node;
    }

    G game_;
    PlayerId goal_;
    bool mobility_;
    std::size_t nodes_ = 0;
    std::unique_ptr<Node> root_;
};

template <Game G>
SolveResult solve(const G& game, const StateOf<G>& s, PlayerId goal,
                  std::size_t max_nodes = std::numeric_limits<std::size_t>::max(), bool mobility = false) {
    Solver<G> solver(game, s, goal, mobility);
    return solver.run(max_nodes);
}

}  // namespace gpn::pns
