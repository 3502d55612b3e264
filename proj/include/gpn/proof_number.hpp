/**
 * @file proof_number.hpp
 * @brief Extended natural numbers (N + {inf}) with saturating arithmetic, as used for
 * proof and disproof numbers.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace gpn {

class ProofNumber {
public:
    using value_type = std::uint64_t;

    constexpr ProofNumber() noexcept = default;
    constexpr explicit ProofNumber(value_type v) noexcept : value_(v < kInf ? v : kInf) {}

    static constexpr ProofNumber infinity() noexcept { return ProofNumber(kInf); }
    static constexpr ProofNumber zero() noexcept { return ProofNumber(0); }
    static constexpr ProofNumber one() noexcept { return ProofNumber(1); }

    constexpr bool is_infinite() const noexcept { return value_ == kInf; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }
    constexpr bool is_finite() const noexcept { return value_ != kInf; }

    /// Raw value; meaningless when infinite.
    constexpr value_type value() const noexcept { return value_; }

    constexpr auto operator<=>(const ProofNumber&) const noexcept = default;

    // inf + x = inf; finite sums clamp just below the sentinel.
    friend constexpr ProofNumber operator+(ProofNumber a, ProofNumber b) noexcept {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        if (a.value_ > kInf - 1 - b.value_) return ProofNumber(kInf - 1);
        return ProofNumber(a.value_ + b.value_);
    }
    constexpr ProofNumber& operator+=(ProofNumber o) noexcept { return *this = *this + o; }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    static constexpr value_type kInf = std::numeric_limits<value_type>::max();
    value_type value_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, ProofNumber pn) { return os << pn.to_string(); }

}  // namespace gpn
