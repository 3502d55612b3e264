/**
 * @file registry.hpp
 * @brief Game lookup from string specs of the form `name[:param[xparam...]]`:
 *
 *   tictactoe
 *   tri-tictactoe
 *   knightthrough[:N[xH]]     N x N board, H home rows per player (default 8x2)
 *   connect4[:CxRxK]          C columns, R rows, connect-K (default 5x4x3)
 */
#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpn/games/connect_four.hpp"
#include "gpn/games/knightthrough.hpp"
#include "gpn/games/mnk.hpp"

namespace gpn::games {

class GameSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using AnyGame = std::variant<TicTacToe, TriTicTacToe, ConnectFour, Knightthrough>;

namespace detail {

inline std::vector<int> parse_dims(std::string_view params, std::string_view spec) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const auto end = params.find('x', start);
        const auto token = params.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
            throw GameSpecError("bad game parameter '" + std::string(token) + "' in '" + std::string(spec) + "'");
        out.push_back(value);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace detail

inline AnyGame make_game(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    const bool has_params = colon != std::string_view::npos;
    const auto dims = has_params ? detail::parse_dims(spec.substr(colon + 1), spec) : std::vector<int>{};

    auto no_params = [&] {
        if (has_params) throw GameSpecError("game '" + std::string(name) + "' takes no parameters: '" + std::string(spec) + "'");
    };

    if (name == "tictactoe") {
        no_params();
        return TicTacToe{};
    }
    if (name == "tri-tictactoe") {
        no_params();
        return TriTicTacToe{};
    }
    if (name == "knightthrough") {
        if (dims.size() > 2) throw GameSpecError("knightthrough expects N or NxH: '" + std::string(spec) + "'");
        const int size = dims.empty() ? 8 : dims[0];
        const int home = dims.size() == 2 ? dims[1] : (dims.empty() || size >= 6 ? 2 : 1);
        if (size < 3 || 2 * home >= size)
            throw GameSpecError("knightthrough needs N >= 3 and 2H < N: '" + std::string(spec) + "'");
        return Knightthrough(size, home);
    }
    if (name == "connect4") {
        if (!dims.empty() && dims.size() != 3) throw GameSpecError("connect4 expects CxRxK: '" + std::string(spec) + "'");
        if (dims.empty()) return ConnectFour{};
        return ConnectFour(dims[0], dims[1], dims[2]);
    }
    throw GameSpecError("unknown game '" + std::string(name) + "'");
}

inline std::string game_spec_help() {
    return "tictactoe | tri-tictactoe | knightthrough[:N[xH]] | connect4[:CxRxK]";
}

}  // namespace gpn::games
