#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nes/frequency_plan.hpp"
#include "nes/game_model.hpp"
#include "nes/seeker_dynamics.hpp"
#include "nes/sim_engine.hpp"

namespace nes {

// A complete simulation setup as read from a scenario JSON file.
struct Scenario {
    QuadraticGame game;
    SeekerParams seeker;
    std::vector<RationalRatio> ratios;
    double base_omega;
    Vector theta0;
    double t_end;
    std::size_t steps_per_fast_period = 100;
    std::size_t record_every = 10;

    bool operator==(const Scenario&) const = default;
};

// Parses and fully validates a scenario document. Unknown keys are
// rejected; every diagnostic carries the JSON path of the offending field.
Scenario parse_scenario(const std::string& text);

std::string serialize_scenario(const Scenario& scenario);

// CSV with header t,theta_1,...,theta_N[,J_1,...,J_N]; 17 significant
// digits per value.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

void write_sweep_csv(std::ostream& out, const SweepResult& result);

// Command dispatch for the toolkit CLI. args excludes the program name.
// Returns 0 on success, 1 on validation errors, 2 on numerical failures.
int dispatch(const std::vector<std::string>& args);

}  // namespace nes
