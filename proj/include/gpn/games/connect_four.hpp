#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/games/grid.hpp"

namespace gpn::games {

/// Gravity connect-K on a columns x rows board. A move is a column index.
class ConnectFour : public GameBase<ConnectFour> {
public:
    using State = GridState;
    using Move = int;

    ConnectFour(int columns = 5, int rows = 4, int k = 3) : columns_(columns), rows_(rows), k_(k) {
        assert(columns_ > 0 && rows_ > 0 && k_ >= 1);
    }

    int num_players() const { return 2; }
    int columns() const { return columns_; }
    int rows() const { return rows_; }
    int k() const { return k_; }
    std::string name() const {
        return "connect4:" + std::to_string(columns_) + "x" + std::to_string(rows_) + "x" + std::to_string(k_);
    }
    int max_plies() const { return columns_ * rows_; }

    State initial_state() const {
        State s;
        s.cells.assign(static_cast<std::size_t>(columns_ * rows_), kEmpty);
        return s;
    }

    using GameBase::legal_moves;
    void legal_moves(const State& s, std::vector<Move>& out) const {
        out.clear();
        if (s.terminal) return;
        for (int c = 0; c < columns_; ++c)
            if (s.cells[top_index(c)] == kEmpty) out.push_back(c);
    }

    void play(State& s, Move column) const {
        int row = 0;
        while (s.cells[static_cast<std::size_t>(row * columns_ + column)] != kEmpty) ++row;
        const auto who = static_cast<std::int8_t>(s.mover);
        s.cells[static_cast<std::size_t>(row * columns_ + column)] = who;
        ++s.ply;
        if (longest_line_through(s, columns_, rows_, row, column, who) >= k_) {
            s.winner = who;
            s.terminal = true;
        } else if (s.ply == columns_ * rows_) {
            s.terminal = true;
        }
        s.mover = 1 - s.mover;
    }

    bool is_terminal(const State& s) const { return s.terminal; }
    PlayerId mover(const State& s) const { return s.mover; }
    std::optional<PlayerId> winner(const State& s) const {
        if (s.winner == kEmpty) return std::nullopt;
        return s.winner;
    }
    std::string key(const State& s) const { return grid_key(s); }
    std::string move_string(Move m) const { return std::to_string(m); }

private:
    std::size_t top_index(int column) const { return static_cast<std::size_t>((rows_ - 1) * columns_ + column); }

    int columns_;
    int rows_;
    int k_;
};

}  // namespace gpn::games
