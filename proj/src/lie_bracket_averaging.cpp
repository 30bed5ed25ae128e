#include "nes/lie_bracket_averaging.hpp"

#include <cmath>
#include <numbers>

#include "nes/errors.hpp"

namespace nes {

namespace {

double dither(int which, double x) {
    return which == 1 ? std::sin(x) : std::cos(x);
}

// Closed form of int_0^beta u_l(n a) da.
double inner_integral(int l, std::int64_t n, double beta) {
    const double nd = static_cast<double>(n);
    return l == 1 ? (1.0 - std::cos(nd * beta)) / nd : std::sin(nd * beta) / nd;
}

}  // namespace

double nu_numeric(int k, int l, std::int64_t n_i, std::int64_t n_j,
                  std::size_t subintervals) {
    if (k < 1 || k > 2 || l < 1 || l > 2)
        throw ValidationError("nu_numeric: dither indices must be 1 or 2");
    if (n_i < 1 || n_j < 1) throw ValidationError("nu_numeric: harmonics must be positive");
    if (subintervals < 64 || subintervals % 2 != 0)
        throw ValidationError("nu_numeric: subinterval count must be even and >= 64");

    const double period = 2.0 * std::numbers::pi;
    const double h = period / static_cast<double>(subintervals);
    auto f = [&](double beta) {
        return dither(k, static_cast<double>(n_i) * beta) * inner_integral(l, n_j, beta);
    };

    double sum = f(0.0) + f(period);
    for (std::size_t s = 1; s < subintervals; ++s)
        sum += (s % 2 == 1 ? 4.0 : 2.0) * f(static_cast<double>(s) * h);
    return (h / 3.0) * sum / period;
}

Vector lie_bracket(const QuadraticGame& game, const SeekerParams& params,
                   std::size_t player, const Vector& actions) {
    const std::size_t n = game.n_players();
    if (player >= n || params.n_players() != n)
        throw ValidationError("lie_bracket: inconsistent player count");
    if (actions.size() != n) throw ValidationError("lie_bracket: actions must have length N");

    Vector out(n, 0.0);
    out[player] = -params.alphas[player] * params.gains[player] *
                  pseudo_gradient(game, actions)[player];
    return out;
}

Vector averaged_rhs(const QuadraticGame& game, const SeekerParams& params,
                    const Vector& avg_actions) {
    const std::size_t n = game.n_players();
    if (params.n_players() != n)
        throw ValidationError("averaged_rhs: inconsistent player count");
    if (avg_actions.size() != n)
        throw ValidationError("averaged_rhs: actions must have length N");

    Vector out = pseudo_gradient(game, avg_actions);
    for (std::size_t i = 0; i < n; ++i) out[i] *= 0.5 * params.alphas[i] * params.gains[i];
    return out;
}

ErrorMatrix error_matrix(const QuadraticGame& game, const SeekerParams& params) {
    const std::size_t n = game.n_players();
    if (params.n_players() != n)
        throw ValidationError("error_matrix: inconsistent player count");

    const InteractionMatrix im = interaction_matrix(game);
    ErrorMatrix em{Matrix(n, n), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        em.kappas[i] = 0.5 * params.alphas[i] * params.gains[i];
        for (std::size_t j = 0; j < n; ++j) em.a_matrix(i, j) = em.kappas[i] * im.h_matrix(i, j);
    }
    return em;
}

}  // namespace nes
