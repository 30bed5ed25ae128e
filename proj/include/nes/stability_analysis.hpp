#pragma once

#include <vector>

#include "nes/lie_bracket_averaging.hpp"
#include "nes/sim_engine.hpp"

namespace nes {

struct GershgorinDisc {
    double center;
    double radius;
};

struct GershgorinResult {
    std::vector<GershgorinDisc> discs;
    bool all_left_half_plane;  // every disc satisfies center + radius < 0
};

GershgorinResult gershgorin_check(const ErrorMatrix& em);

// Solves P A + A' P = -Q by stacking into an N^2 x N^2 linear system.
// The result is symmetrized. Throws StabilityPreconditionError when the
// stacked system is singular (A not Hurwitz).
Matrix solve_lyapunov(const Matrix& a, const Matrix& q);

struct BoundConstants {
    double m_big;    // M = sqrt(lmax(P) / lmin(P))
    double m_small;  // m = lmin(Q) / lmax(P)
};

BoundConstants bound_constants(const Matrix& p, const Matrix& q);

struct BoundCheck {
    double max_rel_violation;
    bool pass;
};

// Checks ||theta(t) - theta*|| <= (1 + slack) M exp(-m t) ||theta(0) - theta*||
// at every grid time of an averaged trajectory.
BoundCheck verify_exponential_bound(const Trajectory& traj, const Vector& theta_star,
                                    double m_big, double m_small, double slack = 1e-6);

struct StabilityReport {
    Matrix a_matrix;
    std::vector<GershgorinDisc> discs;
    bool all_left_half_plane;
    Matrix p_matrix;
    Matrix q_matrix;
    double m_big;
    double m_small;
};

// Full pipeline with Q = I: error matrix, Gershgorin certificate,
// Lyapunov solve, bound constants.
StabilityReport analyze_stability(const QuadraticGame& game, const SeekerParams& params);

}  // namespace nes
