#pragma once

#include <utility>

#include "nes/frequency_plan.hpp"
#include "nes/game_model.hpp"
#include "nes/linalg.hpp"

namespace nes {

struct SeekerParams {
    SeekerParams(Vector alphas, Vector gains);

    Vector alphas;
    Vector gains;

    std::size_t n_players() const { return alphas.size(); }
    bool operator==(const SeekerParams&) const = default;
};

// Bounded-update seeking law for one player:
//   sqrt(alpha_i omega_i) * cos(omega_i t - k_i y_i).
// The player sees only its own scalar payoff measurement y_i.
double update_rate(std::size_t player, double t, double y_i,
                   const SeekerParams& params, const FrequencyPlan& plan);

// Input-affine fields (b1_j, b2_j): zero except at position j, where
// b1 carries sqrt(alpha_j) sin(k_j J_j(theta)) and b2 the cosine twin.
std::pair<Vector, Vector> vector_fields(const QuadraticGame& game,
                                        const SeekerParams& params,
                                        std::size_t player, const Vector& actions);

// Concatenated oscillatory right-hand side; entry i is update_rate of
// player i driven by J_i(theta).
Vector full_rhs(const QuadraticGame& game, const SeekerParams& params,
                const FrequencyPlan& plan, double t, const Vector& actions);

}  // namespace nes
