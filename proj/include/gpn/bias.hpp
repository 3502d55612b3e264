/**
 * @file bias.hpp
 * @brief Proof-number selection biases over a sibling set. Each maps the proof numbers of all
 * children of a node to values in [0,1], larger meaning "closer to proven".
 *
 *   rank: dense rank r (1 = smallest pn, infinity ranked last);  1 - r / max r
 *   max:  1 - (pn - minf) / (1 + maxf - minf), over finite siblings;  0 for infinite pn
 *   sum:  1 - pn / (1 + sum of finite sibling pns);                    0 for infinite pn
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpn/proof_number.hpp"

namespace gpn {

enum class BiasFormula { rank, max, sum };

inline std::string to_string(BiasFormula f) {
    switch (f) {
        case BiasFormula::rank: return "rank";
        case BiasFormula::max: return "max";
        case BiasFormula::sum: return "sum";
    }
    return "rank";
}

inline BiasFormula parse_bias_formula(std::string_view s) {
    if (s == "rank") return BiasFormula::rank;
    if (s == "max") return BiasFormula::max;
    if (s == "sum") return BiasFormula::sum;
    throw std::invalid_argument("unknown bias formula '" + std::string(s) + "' (expected rank, max or sum)");
}

/// Writes the rank bias of every sibling into `out` (same length as `pns`).
inline void pn_rank_all(std::span<const ProofNumber> pns, std::span<double> out) {
    thread_local std::vector<ProofNumber> distinct;
    distinct.assign(pns.begin(), pns.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto max_rank = static_cast<double>(distinct.size());
    for (std::size_t i = 0; i < pns.size(); ++i) {
        const auto rank = std::lower_bound(distinct.begin(), distinct.end(), pns[i]) - distinct.begin() + 1;
        out[i] = 1.0 - static_cast<double>(rank) / max_rank;
    }
}

inline void pn_max_all(std::span<const ProofNumber> pns, std::span<double> out) {
    ProofNumber minf = ProofNumber::infinity();
    ProofNumber maxf = ProofNumber::zero();
    for (const auto pn : pns) {
        if (pn.is_infinite()) continue;
        minf = std::min(minf, pn);
        maxf = std::max(maxf, pn);
    }
    const double lo = static_cast<double>(minf.value());
    const double range = 1.0 + static_cast<double>(maxf.value()) - lo;
    for (std::size_t i = 0; i < pns.size(); ++i)
        out[i] = pns[i].is_infinite() ? 0.0 : 1.0 - (static_cast<double>(pns[i].value()) - lo) / range;
}

inline void pn_sum_all(std::span<const ProofNumber> pns, std::span<double> out) {
    double total = 1.0;
    for (const auto pn : pns)
        if (pn.is_finite()) total += static_cast<double>(pn.value());
    for (std::size_t i = 0; i < pns.size(); ++i)
        out[i] = pns[i].is_infinite() ? 0.0 : 1.0 - static_cast<double>(pns[i].value()) / total;
}

inline void bias_all(BiasFormula f, std::span<const ProofNumber> pns, std::span<double> out) {
    switch (f) {
        case BiasFormula::rank: pn_rank_all(pns, out); return;
        case BiasFormula::max: pn_max_all(pns, out); return;
        case BiasFormula::sum: pn_sum_all(pns, out); return;
    }
}

inline std::vector<double> bias_all(BiasFormula f, std::span<const ProofNumber> pns) {
    std::vector<double> out(pns.size());
    bias_all(f, pns, out);
    return out;
}

/// Bias of sibling `i` within `siblings`.
inline double pn_rank(std::size_t i, std::span<const ProofNumber> siblings) {
    return bias_all(BiasFormula::rank, siblings).at(i);
}
inline double pn_max(std::size_t i, std::span<const ProofNumber> siblings) {
    return bias_all(BiasFormula::max, siblings).at(i);
}
inline double pn_sum(std::size_t i, std::span<const ProofNumber> siblings) {
    return bias_all(BiasFormula::sum, siblings).at(i);
}

}  // namespace gpn
