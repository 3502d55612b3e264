#include <gtest/gtest.h>

#include "gpn/games/registry.hpp"
#include "gpn/oracle.hpp"
#include "support.hpp"

using namespace gpn;
using namespace gpn::games;
using gpn::testing::naive_value;
using gpn::testing::sample_positions;

TEST(Oracle, TicTacToeIsADraw) {
    TicTacToe g;
    EXPECT_EQ(solve_exact(g, g.initial_state()), (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(naive_value(g, g.initial_state(), 0, true), 0.5);
}

TEST(Oracle, DoubleThreatIsAWin) {
    TicTacToe g;
    // X to move with threats on b1 and a3.
    const auto threats = g.from_rows({"...",
                                      "XOO",
                                      "X.X"},
                                     0);
    EXPECT_EQ(solve_exact(g, threats), (std::vector<double>{1, 0}));
    // X to move; a3 blocks O's diagonal and forks a2 / b3.
    const auto fork = g.from_rows({"..X",
                                   ".O.",
                                   "X.O"},
                                  0);
    EXPECT_EQ(solve_exact(g, fork), (std::vector<double>{1, 0}));
    EXPECT_EQ(naive_value(g, fork, 0, true), 1.0);
}

TEST(Oracle, ConnectFourDeskVariantIsFirstPlayerWin) {
    // Pinned from tests/oracles/derive_constants.py (independent Python minimax).
    ConnectFour g(5, 4, 3);
    EXPECT_EQ(solve_exact(g, g.initial_state()), (std::vector<double>{1, 0}));
}

TEST(Oracle, KnightthroughSmallIsFirstPlayerWin) {
    // Pinned from tests/oracles/derive_constants.py.
    Knightthrough g(4, 1);
    EXPECT_TRUE(solve_paranoid(g, g.initial_state(), 0));
    EXPECT_FALSE(solve_paranoid(g, g.initial_state(), 1));
}

TEST(Oracle, MemoizedAgreesWithNaive) {
    TicTacToe g;
    Oracle<TicTacToe> oracle(g);
    for (const auto& s : sample_positions(g, 5, 200, 8)) {
        for (PlayerId p = 0; p < 2; ++p) {
            ASSERT_EQ(oracle.paranoid_value(s, p), naive_value(g, s, p, true));
            ASSERT_EQ(oracle.optimistic_value(s, p), naive_value(g, s, p, false));
        }
        // At two players paranoid win coincides with an exact value of 1.
        const auto exact = oracle.exact_value(s);
        for (PlayerId p = 0; p < 2; ++p) ASSERT_EQ(oracle.paranoid_win(s, p), exact[static_cast<std::size_t>(p)] == 1.0);
    }
}

TEST(Oracle, MultiplayerAgreesWithNaive) {
    TriTicTacToe g;
    Oracle<TriTicTacToe> oracle(g);
    for (const auto& s : sample_positions(g, 9, 40, 12)) {
        if (std::count(s.cells.begin(), s.cells.end(), kEmpty) > 6) continue;
        for (PlayerId p = 0; p < 3; ++p) {
            ASSERT_EQ(oracle.paranoid_value(s, p), naive_value(g, s, p, true));
            ASSERT_EQ(oracle.optimistic_value(s, p), naive_value(g, s, p, false));
        }
    }
}

TEST(Oracle, ThreePlayerImmediateWin) {
    TriTicTacToe g;
    // Player 0 (X) to move with a1-b1 placed and c1 open: completes the line immediately.
    const auto s = g.from_rows({"Z.O.",
                                "..Z.",
                                "O...",
                                "XX.."},
                               0);
    EXPECT_TRUE(solve_paranoid(g, s, 0));
    EXPECT_FALSE(solve_paranoid(g, s, 1));
}

TEST(Oracle, TerminalPositions) {
    TicTacToe g;
    const auto drawn = g.from_rows({"XOX", "XOO", "OXX"}, 1);
    for (PlayerId p = 0; p < 2; ++p) {
        EXPECT_FALSE(solve_paranoid(g, drawn, p));
        EXPECT_FALSE(solve_optimistic(g, drawn, p));
    }
    const auto lost = g.from_rows({"OOO", "XX.", "X.."}, 0);
    EXPECT_FALSE(solve_optimistic(g, lost, 0));
    EXPECT_TRUE(solve_paranoid(g, lost, 1));
}

TEST(Oracle, OptimisticWinWhenALineIsOpen) {
    TicTacToe g;
    const auto s = g.from_rows({"XO.", "OX.", "..."}, 1);
    EXPECT_TRUE(solve_optimistic(g, s, 1));
    EXPECT_TRUE(solve_optimistic(g, s, 0));
}

TEST(Oracle, VerdictInvariants) {
    TicTacToe g;
    Oracle<TicTacToe> oracle(g);
    for (const auto& s : sample_positions(g, 21, 100, 7)) {
        const auto v = oracle.verdict(s);
        ASSERT_TRUE(v.exact_value.has_value());
        for (std::size_t p = 0; p < 2; ++p) {
            if (v.paranoid_win[p]) {
                ASSERT_TRUE(v.optimistic_win[p]);
            }
            ASSERT_EQ(v.paranoid_win[p], (*v.exact_value)[p] == 1.0);
        }
    }
}

TEST(Oracle, NodeCapRaises) {
    ConnectFour g(5, 4, 3);
    EXPECT_THROW(solve_exact(g, g.initial_state(), 100), OracleBudgetExceeded);
    TriTicTacToe tri;
    EXPECT_THROW(Oracle<TriTicTacToe>(tri).exact_value(tri.initial_state()), std::invalid_argument);
}
