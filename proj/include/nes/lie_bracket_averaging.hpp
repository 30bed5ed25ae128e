#pragma once

#include <cstdint>

#include "nes/game_model.hpp"
#include "nes/seeker_dynamics.hpp"

namespace nes {

// Linearized averaged error dynamics: d(theta - theta*)/dt = A (theta - theta*)
// with A = diag(kappa) H and kappa_i = alpha_i k_i / 2.
struct ErrorMatrix {
    Matrix a_matrix;
    Vector kappas;
};

// Averaging coefficient
//   nu = (1/T) int_0^T u_k(n_i b) int_0^b u_l(n_j a) da db,  T = 2 pi,
// with u_1 = sin, u_2 = cos. The inner integral is taken in closed form,
// the outer one by composite Simpson. Diagnostic tool: the cross-harmonic
// zeros here are what justify the collapsed averaged dynamics.
double nu_numeric(int k, int l, std::int64_t n_i, std::int64_t n_j,
                  std::size_t subintervals = 1024);

// Commutator [b1_j, b2_j] of the player's seeker fields:
// -alpha_j k_j (dJ_j/dtheta_j) e_j.
Vector lie_bracket(const QuadraticGame& game, const SeekerParams& params,
                   std::size_t player, const Vector& actions);

// Averaged system right-hand side: 1/2 diag(alpha) diag(k) (H theta + h).
Vector averaged_rhs(const QuadraticGame& game, const SeekerParams& params,
                    const Vector& avg_actions);

ErrorMatrix error_matrix(const QuadraticGame& game, const SeekerParams& params);

}  // namespace nes
