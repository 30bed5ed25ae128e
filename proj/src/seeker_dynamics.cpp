#include "nes/seeker_dynamics.hpp"

#include <cmath>

#include "nes/errors.hpp"

namespace nes {

SeekerParams::SeekerParams(Vector alphas_in, Vector gains_in)
    : alphas(std::move(alphas_in)), gains(std::move(gains_in)) {
    if (alphas.empty() || alphas.size() != gains.size())
        throw ValidationError("seeker params need matching nonempty alpha and gain lists");
    for (double a : alphas)
        if (!(a > 0.0)) throw ValidationError("all alphas must be positive");
    for (double k : gains)
        if (!(k > 0.0)) throw ValidationError("all gains must be positive");
}

double update_rate(std::size_t player, double t, double y_i,
                   const SeekerParams& params, const FrequencyPlan& plan) {
    if (player >= params.n_players() || player >= plan.n_players())
        throw ValidationError("update_rate: player index out of range");
    const double omega = plan.omegas[player];
    return std::sqrt(params.alphas[player] * omega) *
           std::cos(omega * t - params.gains[player] * y_i);
}

std::pair<Vector, Vector> vector_fields(const QuadraticGame& game,
                                        const SeekerParams& params,
                                        std::size_t player, const Vector& actions) {
    const std::size_t n = game.n_players();
    if (player >= n || params.n_players() != n)
        throw ValidationError("vector_fields: inconsistent player count");
    if (actions.size() != n) throw ValidationError("vector_fields: actions must have length N");

    const double phase = params.gains[player] * payoff(game, player, actions);
    const double amp = std::sqrt(params.alphas[player]);
    Vector b1(n, 0.0), b2(n, 0.0);
    b1[player] = amp * std::sin(phase);
    b2[player] = amp * std::cos(phase);
    return {b1, b2};
}

Vector full_rhs(const QuadraticGame& game, const SeekerParams& params,
                const FrequencyPlan& plan, double t, const Vector& actions) {
    const std::size_t n = game.n_players();
    if (params.n_players() != n || plan.n_players() != n)
        throw ValidationError("full_rhs: inconsistent player count");
    if (actions.size() != n) throw ValidationError("full_rhs: actions must have length N");

    Vector d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y_i = payoff(game, i, actions);
        d[i] = update_rate(i, t, y_i, params, plan);
    }
    return d;
}

}  // namespace nes
