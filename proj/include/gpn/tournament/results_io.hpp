#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpn/tournament/series.hpp"
#include "gpn/tournament/stats.hpp"

namespace gpn::tournament {

inline nlohmann::json to_json(const SeriesSummary& s) {
    return {{"games", s.games},   {"wins", s.wins},         {"draws", s.draws},
            {"losses", s.losses}, {"score", s.score},       {"p", s.win_rate},
            {"ci95", s.ci95},     {"formatted", format_win_rate(s)}};
}

inline nlohmann::json to_json(const MatchRecord& m) {
    nlohmann::json j = {{"index", m.index},         {"game", m.game},   {"seed", m.seed},
                        {"seats", m.seats},         {"utilities", m.utilities},
                        {"plies", m.plies},         {"iterations", m.iterations},
                        {"moves", m.moves}};
    j["winner_seat"] = m.winner_seat ? nlohmann::json(*m.winner_seat) : nlohmann::json(nullptr);
    j["winner_agent"] = m.winner_agent ? nlohmann::json(*m.winner_agent) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const SeriesConfig& cfg, const SeriesResult& r) {
    nlohmann::json agents = nlohmann::json::array();
    for (const auto& a : cfg.agents) agents.push_back(a.to_string());
    nlohmann::json budget;
    if (cfg.budget.mode() == mcts::SearchBudget::Mode::iterations) budget = {{"iterations", cfg.budget.max_iterations()}};
    else budget = {{"time_ms", cfg.budget.time_per_move().count()}};
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& m : r.matches) matches.push_back(to_json(m));
    return {{"game", cfg.game},   {"agents", agents},           {"budget", budget},
            {"seed", cfg.seed},   {"summary", to_json(r.summary)}, {"warnings", r.warnings},
            {"matches", matches}};
}

inline nlohmann::json sweep_to_json(const std::string& param, const std::vector<SweepCell>& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& cell : table) {
        auto row = to_json(cell.summary);
        row["value"] = cell.value;
        rows.push_back(row);
    }
    return {{"param", param}, {"cells", rows}};
}

inline std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

/// CSV with columns value,p,ci95,n.
inline void write_summary_csv(std::ostream& os, const std::vector<SweepCell>& table) {
    os << "value,p,ci95,n\n";
    for (const auto& cell : table)
        os << csv_field(cell.value) << ',' << cell.summary.win_rate << ',' << cell.summary.ci95 << ','
           << cell.summary.games << '\n';
}

}  // namespace gpn::tournament
