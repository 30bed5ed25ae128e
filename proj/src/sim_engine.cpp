#include "nes/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nes/errors.hpp"

namespace nes {

namespace {

bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

Trajectory integrate(const Rhs& rhs, Vector initial, double t_end, double step,
                     std::size_t record_every) {
    if (!(step > 0.0)) throw ValidationError("integrate: step must be positive");
    if (!(t_end > 0.0)) throw ValidationError("integrate: t_end must be positive");
    if (record_every == 0) throw ValidationError("integrate: record_every must be positive");

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(initial);

    Vector state = std::move(initial);
    const std::size_t n = state.size();
    double t = 0.0;
    std::size_t step_count = 0;

    while (t < t_end) {
        const double h = std::min(step, t_end - t);
        const Vector k1 = rhs(t, state);
        const Vector k2 = rhs(t + 0.5 * h, state + (0.5 * h) * k1);
        const Vector k3 = rhs(t + 0.5 * h, state + (0.5 * h) * k2);
        const Vector k4 = rhs(t + h, state + h * k3);
        for (std::size_t i = 0; i < n; ++i)
            state[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t += h;
        ++step_count;

        if (!all_finite(state))
            throw DivergenceError("integrate: non-finite state at t = " + std::to_string(t), t);

        const bool final_step = !(t < t_end);
        if (step_count % record_every == 0 || final_step) {
            traj.times.push_back(t);
            traj.states.push_back(state);
        }
    }
    return traj;
}

Trajectory closed_form_averaged(const ErrorMatrix& em, const Vector& theta0,
                                const Vector& theta_star,
                                const std::vector<double>& times) {
    if (times.empty() || times.front() != 0.0)
        throw ValidationError("closed_form_averaged: times must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw ValidationError("closed_form_averaged: times must be strictly increasing");

    const Vector offset0 = theta0 - theta_star;
    Trajectory traj;
    traj.times = times;
    traj.states.reserve(times.size());
    for (double t : times) {
        const Vector offset = matrix_exp(t * em.a_matrix) * offset0;
        traj.states.push_back(theta_star + offset);
    }
    return traj;
}

Trajectory run_seeker(const QuadraticGame& game, const SeekerParams& params,
                      const FrequencyPlan& plan, const Vector& theta0,
                      double t_end, std::size_t steps_per_fast_period,
                      std::size_t record_every) {
    if (steps_per_fast_period < 20)
        throw ValidationError("run_seeker: steps_per_fast_period must be >= 20");
    if (theta0.size() != game.n_players())
        throw ValidationError("run_seeker: theta0 must have length N");

    const double omega_max = *std::max_element(plan.omegas.begin(), plan.omegas.end());
    const double step =
        2.0 * std::numbers::pi / (omega_max * static_cast<double>(steps_per_fast_period));

    auto rhs = [&](double t, const Vector& theta) { return full_rhs(game, params, plan, t, theta); };
    Trajectory traj = integrate(rhs, theta0, t_end, step, record_every);

    traj.payoffs.reserve(traj.states.size());
    for (const Vector& theta : traj.states) {
        Vector j(game.n_players());
        for (std::size_t i = 0; i < game.n_players(); ++i) j[i] = payoff(game, i, theta);
        traj.payoffs.push_back(std::move(j));
    }
    return traj;
}

SweepResult convergence_sweep(const QuadraticGame& game, const SeekerParams& params,
                              const FrequencyPlan& base_plan,
                              const std::vector<std::int64_t>& multipliers,
                              const Vector& theta0, double t_end,
                              std::size_t steps_per_fast_period) {
    if (multipliers.size() < 3)
        throw ValidationError("convergence_sweep: need at least 3 multipliers");
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (multipliers[i] <= 0)
            throw ValidationError("convergence_sweep: multipliers must be positive");
        if (i > 0 && multipliers[i] <= multipliers[i - 1])
            throw ValidationError("convergence_sweep: multipliers must be strictly increasing");
    }

    const ErrorMatrix em = error_matrix(game, params);
    const Vector theta_star = nash_equilibrium(game).actions;

    SweepResult result;
    for (std::int64_t c : multipliers) {
        const FrequencyPlan plan =
            build_frequency_plan(base_plan.ratios, base_plan.base_omega * static_cast<double>(c));
        Trajectory osc;
        try {
            osc = run_seeker(game, params, plan, theta0, t_end, steps_per_fast_period);
        } catch (const DivergenceError& e) {
            throw DivergenceError("convergence_sweep: multiplier " + std::to_string(c) + ": " +
                                      e.what(),
                                  e.time);
        }
        const Trajectory avg = closed_form_averaged(em, theta0, theta_star, osc.times);

        double sup = 0.0;
        for (std::size_t s = 0; s < osc.states.size(); ++s)
            sup = std::max(sup, norm2(osc.states[s] - avg.states[s]));
        result.omega_tildes.push_back(plan.omega_tilde);
        result.sup_errors.push_back(sup);
    }

    // Least-squares slope of log sup_error against log omega_tilde.
    const std::size_t m = result.omega_tildes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(result.omega_tildes[i]);
        const double y = std::log(result.sup_errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double md = static_cast<double>(m);
    result.loglog_slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);

    result.monotone_decreasing = true;
    for (std::size_t i = 1; i < m; ++i)
        if (!(result.sup_errors[i] < result.sup_errors[i - 1])) result.monotone_decreasing = false;

    return result;
}

double residual_estimate(const Trajectory& traj, const Vector& theta_star,
                         double window_fraction) {
    if (traj.times.empty()) throw ValidationError("residual_estimate: empty trajectory");
    if (!(window_fraction > 0.0) || window_fraction > 1.0)
        throw ValidationError("residual_estimate: window_fraction must be in (0, 1]");

    const double t_end = traj.times.back();
    const double t_from = t_end - window_fraction * (t_end - traj.times.front());
    double sup = 0.0;
    bool any = false;
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        if (traj.times[s] < t_from) continue;
        sup = std::max(sup, norm2(traj.states[s] - theta_star));
        any = true;
    }
    if (!any) throw ValidationError("residual_estimate: window contains no samples");
    return sup;
}

}  // namespace nes
