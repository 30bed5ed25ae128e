#pragma once

#include <vector>

#include "nes/linalg.hpp"

namespace nes {

// N-player quadratic game. Player i's payoff is
//   J_i(theta) = 1/2 theta' H_i theta + h_i' theta + c_i
// with H_i symmetric and H_i(i,i) < 0. Construction validates and
// symmetrizes the Hessians (1e-12 absolute tolerance on the input).
class QuadraticGame {
public:
    QuadraticGame(std::vector<Matrix> hessians,
                  std::vector<Vector> linear_terms,
                  Vector constants);

    std::size_t n_players() const { return hessians_.size(); }
    const Matrix& hessian(std::size_t player) const { return hessians_[player]; }
    const Vector& linear_term(std::size_t player) const { return linear_terms_[player]; }
    double constant(std::size_t player) const { return constants_[player]; }

    bool operator==(const QuadraticGame&) const = default;

private:
    std::vector<Matrix> hessians_;
    std::vector<Vector> linear_terms_;
    Vector constants_;
};

// Row i is the i-th player's own-gradient coefficients; h holds the
// own-action linear terms.
struct InteractionMatrix {
    Matrix h_matrix;
    Vector h_vector;
};

struct NashPoint {
    Vector actions;
    Vector payoffs;
};

struct DominanceReport {
    Vector margins;  // |H_ii| - sum_{j != i} |H_ij| per row
    bool pass;       // all margins strictly positive
};

double payoff(const QuadraticGame& game, std::size_t player, const Vector& actions);

// Stacked own-action partials dJ_i/dtheta_i; equals H theta + h.
Vector pseudo_gradient(const QuadraticGame& game, const Vector& actions);

InteractionMatrix interaction_matrix(const QuadraticGame& game);

// Solves H theta* = -h directly; payoffs evaluated at theta*.
NashPoint nash_equilibrium(const QuadraticGame& game);

DominanceReport check_diagonal_dominance(const QuadraticGame& game);

}  // namespace nes
