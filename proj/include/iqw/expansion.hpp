#pragma once

#include <optional>
#include <string>

#include "iqw/partition.hpp"
#include "iqw/ratq.hpp"

namespace iqw {

// Finitely supported coefficient vector over partitions: the carrier of
// structure constants and change-of-basis data. `truncation` empty means the
// expansion is exact and finite.
struct Expansion {
    std::string basis;
    std::optional<int> truncation;
    PartMap<RatQ> coeffs;

    Expansion() = default;
    explicit Expansion(std::string b, std::optional<int> trunc = std::nullopt)
        : basis(std::move(b)), truncation(trunc) {}

    void add(const Partition& p, const RatQ& c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(p);
        if (it == coeffs.end()) {
            coeffs.emplace(p, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    RatQ coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? RatQ::zero() : it->second;
    }
    bool is_zero() const { return coeffs.empty(); }

    // Truncated expansions refuse comparison across different truncations.
    bool equals(const Expansion& other) const {
        if (truncation != other.truncation)
            throw std::invalid_argument("Expansion: comparing across different truncations");
        return basis == other.basis && coeffs == other.coeffs;
    }
};

}  // namespace iqw
