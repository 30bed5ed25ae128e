#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nes/frequency_plan.hpp"
#include "nes/game_model.hpp"
#include "nes/lie_bracket_averaging.hpp"
#include "nes/seeker_dynamics.hpp"

namespace nes {

struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> states;
    std::vector<Vector> payoffs;  // optional; empty when not recorded
};

using Rhs = std::function<Vector(double, const Vector&)>;

// Classical fixed-step RK4. States recorded at t = 0, every
// record_every-th step, and at t_end (the final step is shortened to
// land there exactly). Throws DivergenceError when the state leaves
// the finite range.
Trajectory integrate(const Rhs& rhs, Vector initial, double t_end, double step,
                     std::size_t record_every);

// theta(t) = theta* + exp(A t) (theta0 - theta*).
Trajectory closed_form_averaged(const ErrorMatrix& em, const Vector& theta0,
                                const Vector& theta_star,
                                const std::vector<double>& times);

// Integrates the oscillatory seeker with step 2 pi / (max omega_i *
// steps_per_fast_period), recording payoffs alongside states.
Trajectory run_seeker(const QuadraticGame& game, const SeekerParams& params,
                      const FrequencyPlan& plan, const Vector& theta0,
                      double t_end, std::size_t steps_per_fast_period,
                      std::size_t record_every = 10);

struct SweepResult {
    std::vector<double> omega_tildes;
    std::vector<double> sup_errors;  // sup_t ||theta(t) - thetabar(t)||_2 per run
    double loglog_slope = 0.0;       // least-squares slope of log sup_error vs log omega_tilde
    bool monotone_decreasing = false;  // informational
};

// Scales the base frequency by each multiplier, runs the oscillatory
// seeker against the closed-form averaged trajectory on the same grid,
// and fits the log-log decay rate of the sup deviation.
SweepResult convergence_sweep(const QuadraticGame& game, const SeekerParams& params,
                              const FrequencyPlan& base_plan,
                              const std::vector<std::int64_t>& multipliers,
                              const Vector& theta0, double t_end,
                              std::size_t steps_per_fast_period = 100);

// Sup of ||theta(t) - theta*||_2 over the trailing window_fraction of the grid.
double residual_estimate(const Trajectory& traj, const Vector& theta_star,
                         double window_fraction);

}  // namespace nes
