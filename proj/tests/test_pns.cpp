#include <gtest/gtest.h>

#include "gpn/games/registry.hpp"
#include "gpn/oracle.hpp"
#include "gpn/pns.hpp"
#include "support.hpp"

using namespace gpn;
using namespace gpn::games;
using namespace gpn::pns;

namespace {

using Node = PnsNode<TicTacToe>;

std::unique_ptr<Node> leaf(ProofNumber pn, ProofNumber dpn) {
    auto n = std::make_unique<Node>();
    n->pn = pn;
    n->dpn = dpn;
    return n;
}

}  // namespace

TEST(Pns, MostProvingFollowsMinPnAtOrNodes) {
    Node root;
    root.kind = NodeKind::or_node;
    root.expanded = true;
    for (auto pn : {3u, 1u, 2u}) root.children.push_back(leaf(ProofNumber(pn), ProofNumber(1)));
    EXPECT_EQ(&select_most_proving(root), root.children[1].get());
}

TEST(Pns, MostProvingFollowsMinDpnAtAndNodes) {
    Node root;
    root.kind = NodeKind::and_node;
    root.expanded = true;
    root.children.push_back(leaf(ProofNumber(1), ProofNumber::infinity()));
    root.children.push_back(leaf(ProofNumber(9), ProofNumber(4)));
    EXPECT_EQ(&select_most_proving(root), root.children[1].get());
}

TEST(Pns, MostProvingTieGoesToFirstChild) {
    Node root;
    root.expanded = true;
    root.children.push_back(leaf(ProofNumber(2), ProofNumber(1)));
    root.children.push_back(leaf(ProofNumber(2), ProofNumber(1)));
    EXPECT_EQ(&select_most_proving(root), root.children[0].get());
}

TEST(Pns, InitLeaf) {
    Node n;
    n.kind = NodeKind::and_node;
    init_leaf(n, 7, false);
    EXPECT_EQ(n.pn, ProofNumber(1));
    EXPECT_EQ(n.dpn, ProofNumber(1));
    init_leaf(n, 7, true);
    EXPECT_EQ(n.pn, ProofNumber(7));
    EXPECT_EQ(n.dpn, ProofNumber(1));
    n.kind = NodeKind::or_node;
    init_leaf(n, 7, true);
    EXPECT_EQ(n.pn, ProofNumber(1));
    EXPECT_EQ(n.dpn, ProofNumber(7));
}

TEST(Pns, SetProofAndDisproof) {
    Node n;
    n.kind = NodeKind::or_node;
    n.expanded = true;
    n.children.push_back(leaf(ProofNumber(3), ProofNumber(2)));
    n.children.push_back(leaf(ProofNumber::infinity(), ProofNumber(0)));
    EXPECT_TRUE(set_proof_and_disproof(n));
    EXPECT_EQ(n.pn, ProofNumber(3));
    EXPECT_EQ(n.dpn, ProofNumber(2));
    EXPECT_FALSE(set_proof_and_disproof(n));
    n.kind = NodeKind::and_node;
    set_proof_and_disproof(n);
    EXPECT_TRUE(n.pn.is_infinite());
    EXPECT_TRUE(n.dpn.is_zero());
}

TEST(Pns, TicTacToeIsNotAFirstPlayerWin) {
    TicTacToe g;
    const auto r = solve(g, g.initial_state(), 0, 1'000'000);
    EXPECT_EQ(r.verdict, Verdict::disproven);
    EXPECT_EQ(solve(g, g.initial_state(), 1, 1'000'000).verdict, Verdict::disproven);
    EXPECT_LE(r.nodes, 1'000'000u);
}

TEST(Pns, ForkIsProven) {
    TicTacToe g;
    const auto fork = g.from_rows({"..X", ".O.", "X.O"}, 0);
    EXPECT_EQ(solve(g, fork, 0).verdict, Verdict::proven);
    EXPECT_EQ(solve(g, fork, 1).verdict, Verdict::disproven);
}

TEST(Pns, KnightthroughSmallMatchesOracle) {
    Knightthrough g(4, 1);
    EXPECT_EQ(solve(g, g.initial_state(), 0).verdict, Verdict::proven);
    EXPECT_EQ(solve(g, g.initial_state(), 1).verdict, Verdict::disproven);
    EXPECT_EQ(solve(g, g.initial_state(), 0, 100'000'000, true).verdict, Verdict::proven);
}

TEST(Pns, BudgetGivesUnknown) {
    ConnectFour g(5, 4, 3);
    const auto r = solve(g, g.initial_state(), 0, 50);
    EXPECT_EQ(r.verdict, Verdict::unknown);
    EXPECT_EQ(to_string(r.verdict), "UNKNOWN");
}

template <class G>
void check_against_oracle(const G& g, std::uint64_t seed, int count, int plies) {
    Oracle<G> oracle(g);
    for (const auto& s : gpn::testing::sample_positions(g, seed, count, plies)) {
        for (PlayerId p = 0; p < 2; ++p) {
            for (bool mobility : {false, true}) {
                const auto v = solve(g, s, p, std::numeric_limits<std::size_t>::max(), mobility).verdict;
                ASSERT_NE(v, Verdict::unknown);
                ASSERT_EQ(v == Verdict::proven, oracle.paranoid_win(s, p)) << g.key(s) << " goal " << p;
            }
        }
    }
}

TEST(Pns, AgreesWithOracleOnSampledPositions) {
    check_against_oracle(TicTacToe{}, 3, 200, 8);
    check_against_oracle(ConnectFour(5, 4, 3), 4, 40, 20);
}

// Without draws, proving one side's win is disproving the other's.
TEST(Pns, GoalsAreDualWithoutDraws) {
    Knightthrough g(4, 1);
    Solver<Knightthrough> a(g, g.initial_state(), 0);
    Solver<Knightthrough> b(g, g.initial_state(), 1);
    for (int i = 0; i < 200 && a.verdict() == Verdict::unknown; ++i) a.step();
    // Expand b at the same nodes as a.
    auto replay = [&](auto& self, const PnsNode<Knightthrough>& x, PnsNode<Knightthrough>& y) -> void {
        if (!x.expanded) return;
        b.expand(y);
        for (std::size_t i = 0; i < x.children.size(); ++i) self(self, *x.children[i], *y.children[i]);
    };
    replay(replay, a.root(), b.root());
    auto check = [](auto& self, const auto& x, const auto& y) -> void {
        ASSERT_EQ(x.pn, y.dpn);
        ASSERT_EQ(x.dpn, y.pn);
        ASSERT_EQ(x.children.size(), y.children.size());
        for (std::size_t i = 0; i < x.children.size(); ++i) self(self, *x.children[i], *y.children[i]);
    };
    check(check, a.root(), b.root());
    EXPECT_EQ(a.nodes(), b.nodes());
}
