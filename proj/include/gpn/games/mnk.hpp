/**
 * @file mnk.hpp
 * @brief Place-anywhere k-in-a-row games on a width x height board for any number of
 * players: Tic-Tac-Toe and its three-player 4x4 variant.
 */
#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/games/grid.hpp"

namespace gpn::games {

class MnkGame : public GameBase<MnkGame> {
public:
    using State = GridState;
    using Move = int;  // cell index

    MnkGame(std::string name, int width, int height, int k, int players)
        : name_(std::move(name)), width_(width), height_(height), k_(k), players_(players) {
        assert(players_ >= 2 && k_ >= 1 && width_ > 0 && height_ > 0);
    }

    int num_players() const { return players_; }
    int width() const { return width_; }
    int height() const { return height_; }
    int k() const { return k_; }
    std::string name() const { return name_; }
    int max_plies() const { return width_ * height_; }

    State initial_state() const {
        State s;
        s.cells.assign(static_cast<std::size_t>(width_ * height_), kEmpty);
        return s;
    }

    using GameBase::legal_moves;
    void legal_moves(const State& s, std::vector<Move>& out) const {
        out.clear();
        if (s.terminal) return;
        for (int i = 0; i < width_ * height_; ++i)
            if (s.cells[static_cast<std::size_t>(i)] == kEmpty) out.push_back(i);
    }

    void play(State& s, Move cell) const {
        const auto who = static_cast<std::int8_t>(s.mover);
        s.cells[static_cast<std::size_t>(cell)] = who;
        ++s.ply;
        if (longest_line_through(s, width_, height_, cell / width_, cell % width_, who) >= k_) {
            s.winner = who;
            s.terminal = true;
        } else if (s.ply == width_ * height_) {
            s.terminal = true;
        }
        s.mover = (s.mover + 1) % players_;
    }

    bool is_terminal(const State& s) const { return s.terminal; }
    PlayerId mover(const State& s) const { return s.mover; }
    std::optional<PlayerId> winner(const State& s) const {
        if (s.winner == kEmpty) return std::nullopt;
        return s.winner;
    }
    std::string key(const State& s) const { return grid_key(s); }
    std::string move_string(Move m) const { return cell_name(width_, m); }

    /// Builds a position from a row-major picture, top row first: '.' empty, 'X'/'O'/'Z' for
    /// players 0/1/2 (or digits). Mover and terminal status are derived from the marks.
    State from_rows(const std::vector<std::string>& rows, PlayerId mover) const {
        State s = initial_state();
        for (int r = 0; r < height_; ++r) {
            const auto& line = rows.at(static_cast<std::size_t>(height_ - 1 - r));
            for (int c = 0; c < width_; ++c) {
                const char ch = line.at(static_cast<std::size_t>(c));
                std::int8_t v = kEmpty;
                if (ch == 'X' || ch == '0') v = 0;
                else if (ch == 'O' || ch == '1') v = 1;
                else if (ch == 'Z' || ch == '2') v = 2;
                if (v != kEmpty) {
                    s.cells[static_cast<std::size_t>(r * width_ + c)] = v;
                    ++s.ply;
                }
            }
        }
        s.mover = mover;
        for (int i = 0; i < width_ * height_ && !s.terminal; ++i) {
            const auto v = s.cells[static_cast<std::size_t>(i)];
            if (v != kEmpty && longest_line_through(s, width_, height_, i / width_, i % width_, v) >= k_) {
                s.winner = v;
                s.terminal = true;
            }
        }
        if (s.ply == width_ * height_) s.terminal = true;
        return s;
    }

private:
    std::string name_;
    int width_;
    int height_;
    int k_;
    int players_;
};

class TicTacToe : public MnkGame {
public:
    TicTacToe() : MnkGame("tictactoe", 3, 3, 3, 2) {}
};

/// Three players on a 4x4 board; the first completed line of three wins.
class TriTicTacToe : public MnkGame {
public:
    TriTicTacToe() : MnkGame("tri-tictactoe", 4, 4, 3, 3) {}
};

}  // namespace gpn::games
