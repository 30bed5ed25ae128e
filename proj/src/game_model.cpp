#include "nes/game_model.hpp"

#include <cmath>
#include <string>

#include "nes/errors.hpp"

namespace nes {

QuadraticGame::QuadraticGame(std::vector<Matrix> hessians,
                             std::vector<Vector> linear_terms,
                             Vector constants)
    : hessians_(std::move(hessians)),
      linear_terms_(std::move(linear_terms)),
      constants_(std::move(constants)) {
    const std::size_t n = hessians_.size();
    if (n == 0) throw ValidationError("game must have at least one player");
    if (linear_terms_.size() != n || constants_.size() != n)
        throw ValidationError("game needs one Hessian, linear term and constant per player");

    for (std::size_t i = 0; i < n; ++i) {
        Matrix& hi = hessians_[i];
        if (hi.rows() != n || hi.cols() != n)
            throw ValidationError("hessians[" + std::to_string(i) + "] must be " +
                                  std::to_string(n) + "x" + std::to_string(n));
        if (linear_terms_[i].size() != n)
            throw ValidationError("linear_terms[" + std::to_string(i) + "] must have length " +
                                  std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (std::fabs(hi(j, k) - hi(k, j)) > 1e-12)
                    throw ValidationError("hessians[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "][" + std::to_string(k) +
                                          "] breaks symmetry beyond 1e-12");
                const double avg = 0.5 * (hi(j, k) + hi(k, j));
                hi(j, k) = hi(k, j) = avg;
            }
        if (!(hi(i, i) < 0.0))
            throw ValidationError("hessians[" + std::to_string(i) + "][" + std::to_string(i) +
                                  "][" + std::to_string(i) + "] must be negative");
    }
}

double payoff(const QuadraticGame& game, std::size_t player, const Vector& actions) {
    const std::size_t n = game.n_players();
    if (player >= n) throw ValidationError("payoff: player index out of range");
    if (actions.size() != n) throw ValidationError("payoff: actions must have length N");

    const Matrix& h = game.hessian(player);
    const Vector& lin = game.linear_term(player);
    double v = game.constant(player);
    for (std::size_t j = 0; j < n; ++j) {
        v += lin[j] * actions[j];
        for (std::size_t k = 0; k < n; ++k) v += 0.5 * h(j, k) * actions[j] * actions[k];
    }
    return v;
}

Vector pseudo_gradient(const QuadraticGame& game, const Vector& actions) {
    const std::size_t n = game.n_players();
    if (actions.size() != n) throw ValidationError("pseudo_gradient: actions must have length N");

    Vector g(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& h = game.hessian(i);
        double v = game.linear_term(i)[i];
        for (std::size_t j = 0; j < n; ++j) v += h(i, j) * actions[j];
        g[i] = v;
    }
    return g;
}

InteractionMatrix interaction_matrix(const QuadraticGame& game) {
    const std::size_t n = game.n_players();
    InteractionMatrix im{Matrix(n, n), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) im.h_matrix(i, j) = game.hessian(i)(i, j);
        im.h_vector[i] = game.linear_term(i)[i];
    }
    return im;
}

NashPoint nash_equilibrium(const QuadraticGame& game) {
    const InteractionMatrix im = interaction_matrix(game);
    const Vector theta = solve_linear(im.h_matrix, -1.0 * im.h_vector);
    Vector payoffs(game.n_players());
    for (std::size_t i = 0; i < game.n_players(); ++i) payoffs[i] = payoff(game, i, theta);
    return NashPoint{theta, payoffs};
}

DominanceReport check_diagonal_dominance(const QuadraticGame& game) {
    const std::size_t n = game.n_players();
    DominanceReport report{Vector(n), true};
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& h = game.hessian(i);
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) off += std::fabs(h(i, j));
        report.margins[i] = std::fabs(h(i, i)) - off;
        if (!(report.margins[i] > 0.0)) report.pass = false;
    }
    return report;
}

}  // namespace nes
