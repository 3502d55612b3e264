/**
 * @file stats.hpp
 * @brief Win-rate summaries with a 95% normal-approximation confidence interval.
 *
 * Each game scores 1 / 0.5 / 0 for the tracked agent. The half-width is
 * 1.96 * s / sqrt(n) with s the Bessel-corrected sample standard deviation of the per-game
 * scores; without draws this is 1.96 * sqrt(p(1-p)/(n-1)).
 */
#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

namespace gpn::tournament {

struct SeriesSummary {
    int games = 0;
    int wins = 0;
    int draws = 0;
    int losses = 0;
    double score = 0.0;     // wins + 0.5 * draws
    double win_rate = 0.0;  // score / games
    double ci95 = 0.0;      // half-width; 0 when fewer than two games
};

inline constexpr double kZ95 = 1.96;

/// Summary from per-game scores in {0, 0.5, 1}.
inline SeriesSummary summarize(std::span<const double> scores) {
    SeriesSummary s;
    s.games = static_cast<int>(scores.size());
    for (const double x : scores) {
        s.score += x;
        if (x == 1.0) ++s.wins;
        else if (x == 0.0) ++s.losses;
        else ++s.draws;
    }
    if (s.games == 0) return s;
    s.win_rate = s.score / s.games;
    if (s.games < 2) return s;
    double ss = 0.0;
    for (const double x : scores) ss += (x - s.win_rate) * (x - s.win_rate);
    const double sd = std::sqrt(ss / (s.games - 1));
    s.ci95 = kZ95 * sd / std::sqrt(static_cast<double>(s.games));
    return s;
}

inline SeriesSummary summarize_counts(int wins, int draws, int losses) {
    std::vector<double> scores;
    scores.insert(scores.end(), static_cast<std::size_t>(wins), 1.0);
    scores.insert(scores.end(), static_cast<std::size_t>(draws), 0.5);
    scores.insert(scores.end(), static_cast<std::size_t>(losses), 0.0);
    return summarize(scores);
}

/// Percentages as printed in result tables, e.g. "74.0±3.85".
inline std::string format_win_rate(const SeriesSummary& s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f±%.2f", 100.0 * s.win_rate, 100.0 * s.ci95);
    return buf;
}

}  // namespace gpn::tournament
