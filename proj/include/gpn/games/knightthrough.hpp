/**
 * @file knightthrough.hpp
 * @brief Knightthrough: Breakthrough with knights. Pieces leap like chess knights but only
 * forward (one row and two columns, or two rows and one column), capture by landing on an
 * enemy piece, and win by reaching the opponent's back row. A player with no legal move on
 * their turn loses, so the game has no draws.
 */
#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gpn/game.hpp"
#include "gpn/games/grid.hpp"

namespace gpn::games {

struct KnightMove {
    std::uint16_t from = 0;
    std::uint16_t to = 0;

    auto operator<=>(const KnightMove&) const = default;
};

class Knightthrough : public GameBase<Knightthrough> {
public:
    using State = GridState;
    using Move = KnightMove;

    explicit Knightthrough(int size = 8, int home_rows = 2) : size_(size), home_rows_(home_rows) {
        assert(size_ >= 3 && home_rows_ >= 1 && 2 * home_rows_ < size_);
    }

    int num_players() const { return 2; }
    int size() const { return size_; }
    int home_rows() const { return home_rows_; }
    std::string name() const { return "knightthrough:" + std::to_string(size_) + "x" + std::to_string(home_rows_); }

    // Every move raises the mover's summed forward progress by at least one row.
    int max_plies() const { return 2 * home_rows_ * size_ * (size_ - 1) + 1; }

    State initial_state() const {
        State s;
        s.cells.assign(static_cast<std::size_t>(size_ * size_), kEmpty);
        for (int r = 0; r < home_rows_; ++r) {
            for (int c = 0; c < size_; ++c) {
                s.cells[index(r, c)] = 0;
                s.cells[index(size_ - 1 - r, c)] = 1;
            }
        }
        return s;
    }

    using GameBase::legal_moves;
    void legal_moves(const State& s, std::vector<Move>& out) const {
        out.clear();
        if (s.terminal) return;
        generate(s, s.mover, [&](int from, int to) {
            out.push_back(Move{static_cast<std::uint16_t>(from), static_cast<std::uint16_t>(to)});
            return false;
        });
    }

    void play(State& s, const Move& m) const {
        const auto who = static_cast<std::int8_t>(s.mover);
        s.cells[m.from] = kEmpty;
        s.cells[m.to] = who;
        ++s.ply;
        s.mover = 1 - s.mover;
        const int row = m.to / size_;
        if (row == goal_row(who)) {
            s.winner = who;
            s.terminal = true;
        } else if (!has_move(s, s.mover)) {
            s.winner = who;
            s.terminal = true;
        }
    }

    bool is_terminal(const State& s) const { return s.terminal; }
    PlayerId mover(const State& s) const { return s.mover; }
    std::optional<PlayerId> winner(const State& s) const {
        if (s.winner == kEmpty) return std::nullopt;
        return s.winner;
    }
    std::string key(const State& s) const { return grid_key(s); }
    std::string move_string(const Move& m) const { return cell_name(size_, m.from) + "-" + cell_name(size_, m.to); }

    int goal_row(PlayerId p) const { return p == 0 ? size_ - 1 : 0; }

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * size_ + c); }

    bool has_move(const State& s, PlayerId p) const {
        return generate(s, p, [](int, int) { return true; });
    }

    // Calls emit(from, to) for each legal leap of player p in move order; stops early and
    // returns true as soon as emit returns true.
    template <class Emit>
    bool generate(const State& s, PlayerId p, Emit&& emit) const {
        static constexpr std::array<std::array<int, 2>, 4> kLeaps = {{{1, -2}, {1, 2}, {2, -1}, {2, 1}}};
        const int forward = p == 0 ? 1 : -1;
        const auto own = static_cast<std::int8_t>(p);
        for (int from = 0; from < size_ * size_; ++from) {
            if (s.cells[static_cast<std::size_t>(from)] != own) continue;
            const int r = from / size_;
            const int c = from % size_;
            for (const auto& leap : kLeaps) {
                const int nr = r + forward * leap[0];
                const int nc = c + leap[1];
                if (nr < 0 || nr >= size_ || nc < 0 || nc >= size_) continue;
                const int to = nr * size_ + nc;
                if (s.cells[static_cast<std::size_t>(to)] == own) continue;
                if (emit(from, to)) return true;
            }
        }
        return false;
    }

    int size_;
    int home_rows_;
};

}  // namespace gpn::games
