/**
 * @file search.hpp
 * @brief UCT with optional score bounds and tree reuse, parameterized by a search extension.
 *
 * One iteration is: tree policy (descend by UCB1 through fully expanded nodes, expand one
 * random untried move), uniformly random playout from the new leaf (skipped at terminals),
 * then backup of the full utility vector, the extension's own backup, and score-bound
 * propagation.
 *
 * An extension type supplies
 *   - `using NodeData = ...;`                      fields stored in every node
 *   - `void on_create(Node&)`                      after a node is created
 *   - `void before_select(Node&)`                  when the tree policy visits a node
 *   - `bool has_bonus() const`                     whether selection adds a bonus term
 *   - `double bonus(const Node&, std::size_t) const`  bonus for the i-th child
 *   - `void on_backup(Node& leaf)`                 after the score backup
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/mcts/node.hpp"
#include "gpn/mcts/score_bounds.hpp"
#include "gpn/random.hpp"

namespace gpn::mcts {

struct Config {
    double c = std::numbers::sqrt2;
    bool score_bounds = true;
    bool reuse = true;
};

class SearchBudget {
public:
    enum class Mode { iterations, time };

    static SearchBudget iterations(std::uint64_t n) { return SearchBudget(Mode::iterations, n, {}); }
    static SearchBudget time(std::chrono::milliseconds per_move) { return SearchBudget(Mode::time, 0, per_move); }

    Mode mode() const noexcept { return mode_; }
    std::uint64_t max_iterations() const noexcept { return iterations_; }
    std::chrono::milliseconds time_per_move() const noexcept { return time_; }

private:
    SearchBudget(Mode mode, std::uint64_t n, std::chrono::milliseconds t) : mode_(mode), iterations_(n), time_(t) {}

    Mode mode_;
    std::uint64_t iterations_;
    std::chrono::milliseconds time_;
};

class NoExpandedChildren : public std::logic_error {
public:
    NoExpandedChildren() : std::logic_error("root has no expanded children") {}
};

/// UCB1 from the perspective of the player choosing at `parent`.
template <class Node>
double ucb1_value(const Node& child, const Node& parent, double c) {
    const double exploit = child.mean(parent.mover);
    return exploit + c * std::sqrt(std::log(static_cast<double>(parent.visits)) / static_cast<double>(child.visits));
}

/// Adds the utility vector to every node from `leaf` up to the root.
template <class Node>
void backprop_scores(Node* leaf, std::span<const double> utilities) {
    for (Node* node = leaf; node; node = node->parent) {
        for (std::size_t q = 0; q < utilities.size(); ++q) node->score_sums[q] += utilities[q];
        ++node->visits;
    }
}

/// Uniformly random playout; returns the terminal utilities.
template <Game G>
std::vector<double> simulate(const G& game, StateOf<G> state, Rng& rng) {
    std::vector<MoveOf<G>> moves;
    while (!game.is_terminal(state)) {
        game.legal_moves(state, moves);
        game.play(state, moves[uniform_index(rng, moves.size())]);
    }
    return game.outcome(state).utilities;
}

/// Move to play from `root`. With bounds: a proven win first, then the most-visited child
/// among those not proven lost (all children if every one is lost). Visit ties go to the
/// earlier move in legal-move order.
template <Game G, class Node>
MoveOf<G> recommend_move(const G& game, const Node& root, bool use_bounds) {
    if (!root.expanded()) throw NoExpandedChildren();
    const auto m = static_cast<std::size_t>(root.mover);
    const auto order = game.legal_moves(root.state);
    auto rank = [&](const Node& c) {
        return static_cast<std::size_t>(std::find(order.begin(), order.end(), *c.move) - order.begin());
    };
    auto better = [&](const Node* a, const Node* b) {
        if (!b) return true;
        if (a->visits != b->visits) return a->visits > b->visits;
        return rank(*a) < rank(*b);
    };

    const Node* best = nullptr;
    if (use_bounds) {
        for (const auto& c : root.children)
            if (c->pess[m] == 1.0 && better(c.get(), best)) best = c.get();
        if (best) return *best->move;
        for (const auto& c : root.children)
            if (c->opti[m] > 0.0 && better(c.get(), best)) best = c.get();
        if (best) return *best->move;
    }
    for (const auto& c : root.children)
        if (better(c.get(), best)) best = c.get();
    return *best->move;
}

/// Plain UCT: no per-node extension state, no selection bonus.
struct NoExtension {
    struct NodeData {};
    template <class Node> void on_create(Node&) {}
    template <class Node> void before_select(Node&) {}
    bool has_bonus() const { return false; }
    template <class Node> double bonus(const Node&, std::size_t) const { return 0.0; }
    template <class Node> void on_backup(Node&) {}
};

template <Game G, class Extension = NoExtension>
class Search {
public:
    using Node = SearchNode<G, typename Extension::NodeData>;
    using State = StateOf<G>;
    using Move = MoveOf<G>;

    Search(G game, Config config, Extension extension = {})
        : game_(std::move(game)), config_(config), ext_(std::move(extension)) {}

    const G& game() const noexcept { return game_; }
    const Config& config() const noexcept { return config_; }
    Extension& extension() noexcept { return ext_; }
    const Extension& extension() const noexcept { return ext_; }

    bool has_root() const noexcept { return root_ != nullptr; }
    Node& root() { return *root_; }
    const Node& root() const { return *root_; }

    /// Discards the tree and starts a fresh one at `s`.
    void reset(const State& s) { root_ = make_node(s, std::nullopt, nullptr); }

    /// Re-roots the tree at the node reached by `moves` from the current root, keeping its
    /// statistics. Falls back to a fresh root when a move has no expanded child.
    void reuse_tree(std::span<const Move> moves) {
        if (moves.empty() || !root_) return;
        State state = root_->state;
        std::unique_ptr<Node> node = std::move(root_);
        for (const auto& mv : moves) {
            game_.play(state, mv);
            std::unique_ptr<Node> next;
            if (node) {
                for (auto& child : node->children) {
                    if (child->move && *child->move == mv) {
                        next = std::move(child);
                        break;
                    }
                }
            }
            node = std::move(next);
        }
        if (node) {
            node->parent = nullptr;
            node->move.reset();
            root_ = std::move(node);
        } else {
            root_ = make_node(state, std::nullopt, nullptr);
        }
    }

    /// Brings the root to `s`: reuses the subtree along `moves_since_root` when tree reuse is
    /// on and the path ends at `s`, otherwise starts fresh.
    void sync(const State& s, std::span<const Move> moves_since_root) {
        if (config_.reuse && root_) {
            reuse_tree(moves_since_root);
            if (root_->state == s) return;
        }
        reset(s);
    }

    bool root_solved() const {
        return config_.score_bounds && root_->solved_for(root_->mover);
    }

    /// One iteration; returns the node the playout started from.
    Node& iterate(Rng& rng) {
        Node* leaf = tree_policy(rng);
        const auto utilities = leaf->terminal ? game_.outcome(leaf->state).utilities : simulate(game_, leaf->state, rng);
        backup(*leaf, utilities);
        return *leaf;
    }

    /// Runs until the budget is spent or the root is solved. Returns iterations done.
    std::uint64_t run(const SearchBudget& budget, Rng& rng) {
        std::uint64_t done = 0;
        if (budget.mode() == SearchBudget::Mode::iterations) {
            while (done < budget.max_iterations() && !root_solved()) {
                iterate(rng);
                ++done;
            }
        } else {
            const auto deadline = std::chrono::steady_clock::now() + budget.time_per_move();
            while (std::chrono::steady_clock::now() < deadline && !root_solved()) {
                iterate(rng);
                ++done;
            }
        }
        return done;
    }

    Move best_move() const { return recommend_move(game_, *root_, config_.score_bounds); }

    /// Child selection at a fully expanded node: argmax of UCB1 plus the extension's bonus
    /// over the bound-eligible children, ties drawn uniformly.
    Node& select_child(Node& node, Rng& rng) {
        std::vector<std::size_t> candidates;
        if (config_.score_bounds) {
            candidates = sb_filter(node);
        } else {
            candidates.resize(node.children.size());
            for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
        }
        double best = -std::numeric_limits<double>::infinity();
        ties_.clear();
        for (const auto i : candidates) {
            double score = ucb1_value(*node.children[i], node, config_.c);
            if (ext_.has_bonus()) score += ext_.bonus(node, i);
            if (score > best) {
                best = score;
                ties_.clear();
                ties_.push_back(i);
            } else if (score == best) {
                ties_.push_back(i);
            }
        }
        const auto pick = ties_.size() == 1 ? ties_.front() : ties_[uniform_index(rng, ties_.size())];
        return *node.children[pick];
    }

    /// Adds the child reached by `move` (which must be untried at `node`).
    Node& expand_move(Node& node, const Move& move) {
        const auto it = std::find(node.untried.begin(), node.untried.end(), move);
        if (it == node.untried.end()) throw IllegalMoveError("move is not untried at this node");
        const auto index = static_cast<std::size_t>(it - node.untried.begin());
        return expand_index(node, index);
    }

    /// Score backup, extension backup, then bound propagation.
    void backup(Node& leaf, std::span<const double> utilities) {
        backprop_scores(&leaf, utilities);
        ext_.on_backup(leaf);
        if (config_.score_bounds) sb_propagate(leaf.parent);
    }

private:
    Node* tree_policy(Rng& rng) {
        Node* node = root_.get();
        while (!node->terminal) {
            ext_.before_select(*node);
            if (!node->fully_expanded()) return &expand_index(*node, uniform_index(rng, node->untried.size()));
            node = &select_child(*node, rng);
        }
        return node;
    }

    Node& expand_index(Node& node, std::size_t index) {
        Move move = node.untried[index];
        node.untried[index] = node.untried.back();
        node.untried.pop_back();
        State next = node.state;
        game_.play(next, move);
        node.children.push_back(make_node(std::move(next), std::move(move), &node));
        return *node.children.back();
    }

    std::unique_ptr<Node> make_node(State s, std::optional<Move> move, Node* parent) {
        auto node = std::make_unique<Node>();
        const auto players = static_cast<std::size_t>(game_.num_players());
        node->state = std::move(s);
        node->move = std::move(move);
        node->parent = parent;
        node->mover = game_.mover(node->state);
        node->terminal = game_.is_terminal(node->state);
        node->score_sums.assign(players, 0.0);
        if (node->terminal) {
            node->pess = game_.outcome(node->state).utilities;
            node->opti = node->pess;
        } else {
            game_.legal_moves(node->state, node->untried);
            node->pess.assign(players, 0.0);
            node->opti.assign(players, 1.0);
        }
        ext_.on_create(*node);
        return node;
    }

    G game_;
    Config config_;
    Extension ext_;
    std::unique_ptr<Node> root_;
    std::vector<std::size_t> ties_;
};

}  // namespace gpn::mcts
