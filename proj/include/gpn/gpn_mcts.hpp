/**
 * @file gpn_mcts.hpp
 * @brief Generalized Proof-Number MCTS: UCT whose selection adds Cpn times a proof-number
 * bias, with one proof number per player in every node.
 *
 * A node is an OR node for its mover and an AND node for every other player, so proving p's
 * win assumes a paranoid coalition of all other players. Proof numbers are maintained by an
 * ancestor walk with early stop; children's biases are recomputed on demand when the tree
 * policy visits a node whose children's proof numbers changed.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpn/bias.hpp"
#include "gpn/game.hpp"
#include "gpn/mcts/search.hpp"
#include "gpn/proof_number.hpp"

namespace gpn {

struct GpnConfig {
    double cpn = 0.0;
    BiasFormula formula = BiasFormula::rank;
    bool mobility = false;
    /// Recompute biases during backup instead of on demand (reference mode for testing).
    bool eager = false;
};

/// Per-node proof-number state.
struct ProofData {
    std::vector<ProofNumber> pn;  // one per player
    std::vector<double> bias;     // per child, for the node's mover
    bool need_recalc = false;
};

/// Leaf value for player p: 0 for a terminal win of p, infinity for any other terminal
/// (draws included), otherwise 1, or the legal-move count when p is not the mover and
/// mobility initialization is on.
template <class Node>
ProofNumber leaf_proof_number(const Node& node, PlayerId p, bool mobility) {
    if (node.terminal) {
        const auto pi = static_cast<std::size_t>(p);
        return node.pess[pi] == 1.0 ? ProofNumber::zero() : ProofNumber::infinity();
    }
    if (mobility && p != node.mover) return ProofNumber(node.untried.size());
    return ProofNumber::one();
}

/// Mobility-initialized value of an unexpanded, non-terminal leaf.
template <class Node>
ProofNumber mobility_init(const Node& leaf, PlayerId p) {
    return leaf_proof_number(leaf, p, /*mobility=*/true);
}

/// Recomputes pn[p] of `node`. Unexpanded nodes take their leaf value (and always report a
/// change). Expanded nodes aggregate their materialized children: min where p moves, saturating
/// sum elsewhere. While untried moves remain, those count as unknown children just enough to
/// keep an OR value off infinity and an AND value off zero.
template <class Node>
bool update_proof_number(Node& node, PlayerId p, bool mobility) {
    const auto pi = static_cast<std::size_t>(p);
    auto& pn = node.extra.pn[pi];
    if (!node.expanded()) {
        pn = leaf_proof_number(node, p, mobility);
        return true;
    }
    const auto old = pn;
    const auto open = node.untried.size();
    if (p == node.mover) {
        auto value = ProofNumber::infinity();
        for (const auto& child : node.children) value = std::min(value, child->extra.pn[pi]);
        if (value.is_infinite() && open > 0) value = ProofNumber::one();
        pn = value;
    } else {
        auto value = ProofNumber::zero();
        for (const auto& child : node.children) value += child->extra.pn[pi];
        if (value.is_zero() && open > 0) value = ProofNumber(open);
        pn = value;
    }
    return pn != old;
}

/// Recomputes the cached bias of every child for the node's mover and clears needRecalc.
template <class Node>
void update_children_pn_scores(Node& node, BiasFormula formula) {
    const auto m = static_cast<std::size_t>(node.mover);
    thread_local std::vector<ProofNumber> pns;
    pns.clear();
    for (const auto& child : node.children) pns.push_back(child->extra.pn[m]);
    node.extra.bias.resize(pns.size());
    bias_all(formula, pns, node.extra.bias);
    node.extra.need_recalc = false;
}

class ProofNumberExtension {
public:
    using NodeData = ProofData;

    ProofNumberExtension(int num_players, GpnConfig config) : players_(num_players), config_(config) {}

    const GpnConfig& config() const noexcept { return config_; }
    std::uint64_t recalculations() const noexcept { return recalcs_; }

    template <class Node>
    void on_create(Node& node) {
        node.extra.pn.assign(static_cast<std::size_t>(players_), ProofNumber::one());
        for (PlayerId p = 0; p < players_; ++p) update_proof_number(node, p, config_.mobility);
        fresh_ = &node;
    }

    template <class Node>
    void before_select(Node& node) {
        if (node.extra.need_recalc) recalc(node);
    }

    bool has_bonus() const { return config_.cpn != 0.0; }

    template <class Node>
    double bonus(const Node& node, std::size_t child) const {
        return config_.cpn * node.extra.bias[child];
    }

    /// Per player, walks from the leaf toward the root until a proof number is unchanged.
    /// A node whose pn changed marks its parent, whose cached child biases are now stale.
    /// An unexpanded leaf counts as changed only when it was just created.
    template <class Node>
    void on_backup(Node& leaf) {
        const bool fresh = static_cast<const void*>(&leaf) == fresh_;
        fresh_ = nullptr;
        for (PlayerId p = 0; p < players_; ++p) {
            for (Node* node = &leaf; node; node = node->parent) {
                const bool changed =
                    node == &leaf && !leaf.expanded() ? fresh : update_proof_number(*node, p, config_.mobility);
                if (!changed) break;
                if (node->parent) node->parent->extra.need_recalc = true;
            }
        }
        if (config_.eager) {
            for (Node* node = &leaf; node; node = node->parent)
                if (node->expanded()) recalc(*node);
        }
    }

private:
    template <class Node>
    void recalc(Node& node) {
        update_children_pn_scores(node, config_.formula);
        ++recalcs_;
    }

    int players_;
    GpnConfig config_;
    std::uint64_t recalcs_ = 0;
    const void* fresh_ = nullptr;
};

template <Game G>
using GpnSearch = mcts::Search<G, ProofNumberExtension>;

template <Game G>
GpnSearch<G> make_gpn_search(const G& game, mcts::Config config, GpnConfig gpn) {
    return GpnSearch<G>(game, config, ProofNumberExtension(game.num_players(), gpn));
}

}  // namespace gpn
