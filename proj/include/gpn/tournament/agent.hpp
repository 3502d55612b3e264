#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/gpn_mcts.hpp"
#include "gpn/mcts/search.hpp"
#include "gpn/random.hpp"
#include "gpn/tournament/agent_spec.hpp"

namespace gpn::tournament {

/// A player seated in a match. Every agent observes every move played, its own included.
template <Game G>
class Agent {
public:
    using State = StateOf<G>;
    using Move = MoveOf<G>;

    virtual ~Agent() = default;
    virtual Move choose(const State& s, const mcts::SearchBudget& budget) = 0;
    virtual void observe(const Move&) {}
    /// Iterations spent on the last `choose`.
    virtual std::uint64_t last_iterations() const { return 0; }
};

template <Game G>
class RandomAgent final : public Agent<G> {
public:
    using typename Agent<G>::State;
    using typename Agent<G>::Move;

    RandomAgent(G game, std::uint64_t seed) : game_(std::move(game)), rng_(seed) {}

    Move choose(const State& s, const mcts::SearchBudget&) override {
        game_.legal_moves(s, moves_);
        return moves_[uniform_index(rng_, moves_.size())];
    }

private:
    G game_;
    Rng rng_;
    std::vector<Move> moves_;
};

template <Game G, class Extension>
class SearchAgent final : public Agent<G> {
public:
    using typename Agent<G>::State;
    using typename Agent<G>::Move;

    SearchAgent(mcts::Search<G, Extension> search, std::uint64_t seed) : search_(std::move(search)), rng_(seed) {}

    Move choose(const State& s, const mcts::SearchBudget& budget) override {
        search_.sync(s, pending_);
        pending_.clear();
        iterations_ = search_.run(budget, rng_);
        try {
            return search_.best_move();
        } catch (const mcts::NoExpandedChildren&) {
            const auto moves = search_.game().legal_moves(s);
            return moves[uniform_index(rng_, moves.size())];
        }
    }

    void observe(const Move& m) override { pending_.push_back(m); }
    std::uint64_t last_iterations() const override { return iterations_; }

    const mcts::Search<G, Extension>& search() const { return search_; }

private:
    mcts::Search<G, Extension> search_;
    Rng rng_;
    std::vector<Move> pending_;
    std::uint64_t iterations_ = 0;
};

template <Game G>
std::unique_ptr<Agent<G>> make_agent(const AgentSpec& spec, const G& game, std::uint64_t seed) {
    switch (spec.kind) {
        case AgentKind::random: return std::make_unique<RandomAgent<G>>(game, seed);
        case AgentKind::mcts:
            return std::make_unique<SearchAgent<G, mcts::NoExtension>>(mcts::Search<G>(game, spec.search), seed);
        case AgentKind::gpn:
            return std::make_unique<SearchAgent<G, ProofNumberExtension>>(make_gpn_search(game, spec.search, spec.gpn), seed);
    }
    return nullptr;
}

}  // namespace gpn::tournament
