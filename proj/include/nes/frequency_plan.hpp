#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nes/linalg.hpp"

namespace nes {

// Exact positive rational, stored in lowest terms.
struct RationalRatio {
    RationalRatio(std::int64_t p, std::int64_t q);

    std::int64_t p;
    std::int64_t q;

    double value() const { return static_cast<double>(p) / static_cast<double>(q); }
    bool operator==(const RationalRatio&) const = default;
};

// Rational probing-frequency structure: omega_i = a_i * omega with the
// common base frequency omega_tilde = omega / prod(q_i), so that every
// omega_i is an integer multiple n_i * omega_tilde.
struct FrequencyPlan {
    double base_omega = 0.0;
    std::vector<RationalRatio> ratios;
    std::int64_t q_product = 0;
    double omega_tilde = 0.0;
    std::vector<std::int64_t> multipliers;  // n_i = p_i * prod_{j != i} q_j
    Vector omegas;                          // omega_i = a_i * omega

    std::size_t n_players() const { return ratios.size(); }
    bool operator==(const FrequencyPlan&) const = default;
};

// Returns colliding index pairs (0-based); empty means all distinct.
std::vector<std::pair<std::size_t, std::size_t>> validate_distinct(
    const std::vector<RationalRatio>& ratios);

FrequencyPlan build_frequency_plan(const std::vector<RationalRatio>& ratios,
                                   double base_omega);

}  // namespace nes
