#pragma once

#include <array>

#include "nes/frequency_plan.hpp"
#include "nes/game_model.hpp"
#include "nes/seeker_dynamics.hpp"

namespace nes {

// Four-firm oligopoly pricing game: firms set prices, consumers split
// total demand according to per-product resistances, and each firm's
// profit is quadratic in the price vector.
struct OligopolyParams {
    std::array<double, 4> resistances;
    std::array<double, 4> marginal_costs;
    double total_demand;
};

QuadraticGame build_oligopoly(const OligopolyParams& params);

struct ScenarioBundle {
    QuadraticGame game;
    SeekerParams seeker;
    FrequencyPlan plan;
    Vector theta0;
    double t_end;
};

// The reference four-firm configuration: R = (0.15, 0.30, 0.60, 1),
// m = (30, 30, 25, 20), S_d = 100, alpha = 0.05, k = (6, 18, 10, 24),
// omega = (30, 24, 44, 36) as integer ratios over base omega = 1,
// theta0 = (52, 40.93, 33.5, 35.09), horizon 100 s.
ScenarioBundle reference_scenario();

}  // namespace nes
