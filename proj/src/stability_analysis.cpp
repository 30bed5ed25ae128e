#include "nes/stability_analysis.hpp"

#include <cmath>
#include <limits>

#include "nes/errors.hpp"

namespace nes {

GershgorinResult gershgorin_check(const ErrorMatrix& em) {
    const std::size_t n = em.a_matrix.rows();
    GershgorinResult result{{}, true};
    result.discs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) radius += std::fabs(em.a_matrix(i, j));
        const double center = em.a_matrix(i, i);
        result.discs.push_back({center, radius});
        if (!(center + radius < 0.0)) result.all_left_half_plane = false;
    }
    return result;
}

Matrix solve_lyapunov(const Matrix& a, const Matrix& q) {
    const std::size_t n = a.rows();
    if (a.cols() != n || q.rows() != n || q.cols() != n)
        throw ValidationError("solve_lyapunov: A and Q must be square with equal size");

    // vec(P A) + vec(A' P) = -vec(Q) over row-stacked P entries:
    // coefficient of P(k,l) in (P A + A' P)(r,c) is
    //   [k == r] A(l, c) + [l == c] A(k, r).
    Matrix stacked(n * n, n * n);
    Vector rhs(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            rhs[row] = -q(r, c);
            for (std::size_t l = 0; l < n; ++l) stacked(row, r * n + l) += a(l, c);
            for (std::size_t k = 0; k < n; ++k) stacked(row, k * n + c) += a(k, r);
        }

    Vector p_flat;
    try {
        p_flat = solve_linear(stacked, rhs);
    } catch (const SingularMatrixError&) {
        throw StabilityPreconditionError(
            "solve_lyapunov: stacked system is singular; A is not Hurwitz");
    }

    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) p(r, c) = p_flat[r * n + c];
    // Symmetrize; the exact solution is symmetric for symmetric Q.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            const double avg = 0.5 * (p(r, c) + p(c, r));
            p(r, c) = p(c, r) = avg;
        }
    return p;
}

BoundConstants bound_constants(const Matrix& p, const Matrix& q) {
    if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows())
        throw ValidationError("bound_constants: P and Q must be square with equal size");
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = i + 1; j < p.cols(); ++j)
            if (std::fabs(p(i, j) - p(j, i)) > 1e-9 * std::max(1.0, max_abs(p)) ||
                std::fabs(q(i, j) - q(j, i)) > 1e-9 * std::max(1.0, max_abs(q)))
                throw ValidationError("bound_constants: P and Q must be symmetric");

    const Vector ev_p = jacobi_eigenvalues(p);
    const Vector ev_q = jacobi_eigenvalues(q);
    if (!(ev_p.front() > 0.0) || !(ev_q.front() > 0.0))
        throw ValidationError("bound_constants: P and Q must be positive definite");

    return BoundConstants{std::sqrt(ev_p.back() / ev_p.front()), ev_q.front() / ev_p.back()};
}

BoundCheck verify_exponential_bound(const Trajectory& traj, const Vector& theta_star,
                                    double m_big, double m_small, double slack) {
    if (traj.times.empty()) throw ValidationError("verify_exponential_bound: empty trajectory");
    if (slack < 0.0) throw ValidationError("verify_exponential_bound: slack must be nonnegative");

    const double initial = norm2(traj.states.front() - theta_star);
    BoundCheck check{0.0, true};
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        const double lhs = norm2(traj.states[s] - theta_star);
        const double bound = m_big * std::exp(-m_small * traj.times[s]) * initial;
        double violation;
        if (bound > 0.0) {
            violation = lhs / bound - 1.0;
        } else {
            violation = lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        }
        check.max_rel_violation = std::max(check.max_rel_violation, violation);
    }
    check.pass = check.max_rel_violation <= slack;
    return check;
}

StabilityReport analyze_stability(const QuadraticGame& game, const SeekerParams& params) {
    const ErrorMatrix em = error_matrix(game, params);
    const GershgorinResult gersh = gershgorin_check(em);
    const Matrix q = Matrix::identity(game.n_players());
    const Matrix p = solve_lyapunov(em.a_matrix, q);
    const BoundConstants bc = bound_constants(p, q);
    return StabilityReport{em.a_matrix, gersh.discs, gersh.all_left_half_plane,
                           p,           q,           bc.m_big, bc.m_small};
}

}  // namespace nes
