#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gpn/game.hpp"

namespace gpn::games {

inline constexpr std::int8_t kEmpty = -1;

/// Board state shared by the grid games. Cells are row-major, row 0 at the bottom.
struct GridState {
    std::vector<std::int8_t> cells;
    PlayerId mover = 0;
    int ply = 0;
    std::int8_t winner = kEmpty;
    bool terminal = false;

    bool operator==(const GridState&) const = default;
};

inline std::string grid_key(const GridState& s) {
    std::string key;
    key.reserve(s.cells.size() + 1);
    key.push_back(static_cast<char>('0' + s.mover));
    for (auto c : s.cells) key.push_back(static_cast<char>('a' + c + 1));
    return key;
}

/// Length of the longest run of `player` through (row, col), scanning the four line directions.
inline int longest_line_through(const GridState& s, int width, int height, int row, int col, std::int8_t player) {
    static constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
    int best = 0;
    for (const auto& d : kDirs) {
        int run = 1;
        for (int sign : {1, -1}) {
            int r = row + sign * d[0];
            int c = col + sign * d[1];
            while (r >= 0 && r < height && c >= 0 && c < width && s.cells[static_cast<std::size_t>(r * width + c)] == player) {
                ++run;
                r += sign * d[0];
                c += sign * d[1];
            }
        }
        best = std::max(best, run);
    }
    return best;
}

inline std::string cell_name(int width, int cell) {
    std::string out(1, static_cast<char>('a' + cell % width));
    out += std::to_string(cell / width + 1);
    return out;
}

}  // namespace gpn::games
