/**
 * @file agent_spec.hpp
 * @brief Agent specs: `random`, `mcts[:key=value,...]`, `gpn[:key=value,...]`.
 *
 *   mcts keys: c, sb, reuse
 *   gpn keys:  c, cpn, bias (rank|max|sum), sb, reuse, mobility
 *
 * Defaults: c = sqrt(2), sb = true, reuse = true, cpn = 0, bias = rank, mobility = false.
 */
#pragma once

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gpn/bias.hpp"
#include "gpn/gpn_mcts.hpp"
#include "gpn/mcts/search.hpp"

namespace gpn::tournament {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class AgentKind { random, mcts, gpn };

struct AgentSpec {
    AgentKind kind = AgentKind::mcts;
    mcts::Config search;
    GpnConfig gpn;

    /// Sets one parameter from its textual value; throws ConfigError for unknown keys or
    /// malformed values.
    void set(std::string_view key, std::string_view value);

    std::string to_string() const;
};

namespace detail {

inline bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    throw ConfigError("bad boolean '" + std::string(v) + "' for key '" + std::string(key) + "'");
}

inline double parse_real(std::string_view key, std::string_view v) {
    const std::string text(v);
    char* end = nullptr;
    const double out = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw ConfigError("bad number '" + text + "' for key '" + std::string(key) + "'");
    return out;
}

inline std::string format_real(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace detail

inline void AgentSpec::set(std::string_view key, std::string_view value) {
    if (kind == AgentKind::random) throw ConfigError("random agent takes no parameters (got '" + std::string(key) + "')");
    if (key == "c") {
        search.c = detail::parse_real(key, value);
        if (search.c < 0) throw ConfigError("c must be non-negative");
    } else if (key == "sb") {
        search.score_bounds = detail::parse_bool(key, value);
    } else if (key == "reuse") {
        search.reuse = detail::parse_bool(key, value);
    } else if (kind == AgentKind::gpn && key == "cpn") {
        gpn.cpn = detail::parse_real(key, value);
        if (gpn.cpn < 0) throw ConfigError("cpn must be non-negative");
    } else if (kind == AgentKind::gpn && key == "bias") {
        try {
            gpn.formula = parse_bias_formula(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else if (kind == AgentKind::gpn && key == "mobility") {
        gpn.mobility = detail::parse_bool(key, value);
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "' for " + (kind == AgentKind::gpn ? "gpn" : "mcts") + " agent");
    }
}

inline std::string AgentSpec::to_string() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    switch (kind) {
        case AgentKind::random: return "random";
        case AgentKind::mcts:
            return "mcts:c=" + detail::format_real(search.c) + ",sb=" + b(search.score_bounds) + ",reuse=" + b(search.reuse);
        case AgentKind::gpn:
            return "gpn:c=" + detail::format_real(search.c) + ",cpn=" + detail::format_real(gpn.cpn) +
                   ",bias=" + gpn::to_string(gpn.formula) + ",sb=" + b(search.score_bounds) +
                   ",reuse=" + b(search.reuse) + ",mobility=" + b(gpn.mobility);
    }
    return "random";
}

inline AgentSpec parse_agent_spec(std::string_view text) {
    const auto colon = text.find(':');
    const auto kind = text.substr(0, colon);
    AgentSpec spec;
    if (kind == "random") spec.kind = AgentKind::random;
    else if (kind == "mcts") spec.kind = AgentKind::mcts;
    else if (kind == "gpn") spec.kind = AgentKind::gpn;
    else throw ConfigError("unknown agent kind '" + std::string(kind) + "' (expected random, mcts or gpn)");
    if (colon == std::string_view::npos) return spec;

    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw ConfigError("expected key=value, got '" + std::string(item) + "' in '" + std::string(text) + "'");
        spec.set(item.substr(0, eq), item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

}  // namespace gpn::tournament
