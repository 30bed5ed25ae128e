#include <doctest.h>

#include <cmath>
#include <random>

#include "nes/errors.hpp"
#include "nes/game_model.hpp"
#include "nes/oligopoly.hpp"
#include "test_support.hpp"

using namespace nes;

namespace {

QuadraticGame one_player_game() {
    Matrix h(1, 1);
    h(0, 0) = -2.0;
    return QuadraticGame({h}, {Vector{2.0}}, Vector{0.0});
}

// Direct double-summation payoff, independent of the library path.
double payoff_oracle(const QuadraticGame& game, std::size_t i, const Vector& theta) {
    const std::size_t n = game.n_players();
    double v = game.constant(i);
    for (std::size_t j = 0; j < n; ++j) {
        v += game.linear_term(i)[j] * theta[j];
        for (std::size_t k = 0; k < n; ++k)
            v += 0.5 * game.hessian(i)(j, k) * theta[j] * theta[k];
    }
    return v;
}

}  // namespace

TEST_CASE("payoff of the one-player game at the origin") {
    CHECK(payoff(one_player_game(), 0, Vector{0.0}) == 0.0);
}

TEST_CASE("payoff at the oligopoly Nash point matches the reference values") {
    const QuadraticGame game = reference_scenario().game;
    const NashPoint nash = nash_equilibrium(game);
    const Vector expected{524.0208, 293.4217, 238.4846, 209.6584};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::fabs(nash.payoffs[i] - expected[i]) < 1e-3);
}

TEST_CASE("payoff agrees with the direct double-sum oracle on random games") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const QuadraticGame game = test::random_game(rng, 3);
        const Vector theta = test::random_actions(rng, 3, -5.0, 5.0);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(payoff(game, i, theta) ==
                  doctest::Approx(payoff_oracle(game, i, theta)).epsilon(1e-12));
    }
}

TEST_CASE("payoff rejects dimension mismatches") {
    CHECK_THROWS_AS(payoff(one_player_game(), 0, Vector{1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(payoff(one_player_game(), 5, Vector{1.0}), ValidationError);
}

TEST_CASE("pseudo-gradient vanishes at the Nash point") {
    std::mt19937 rng(3);
    const QuadraticGame game = reference_scenario().game;
    const NashPoint nash = nash_equilibrium(game);
    const InteractionMatrix im = interaction_matrix(game);
    CHECK(norm_inf(pseudo_gradient(game, nash.actions)) < 1e-9 * (1.0 + norm_inf(im.h_vector)));
}

TEST_CASE("pseudo-gradient matches central finite differences of per-player payoffs") {
    std::mt19937 rng(5);
    const QuadraticGame game = reference_scenario().game;
    const double step = 1e-5;
    for (int trial = 0; trial < 10; ++trial) {
        const Vector theta = test::random_actions(rng, 4, 20.0, 60.0);
        const Vector grad = pseudo_gradient(game, theta);
        for (std::size_t i = 0; i < 4; ++i) {
            Vector up = theta, down = theta;
            up[i] += step;
            down[i] -= step;
            const double fd = (payoff(game, i, up) - payoff(game, i, down)) / (2.0 * step);
            CHECK(std::fabs(grad[i] - fd) < 1e-6);
        }
    }
}

TEST_CASE("pseudo-gradient of the one-player game at the origin") {
    const Vector g = pseudo_gradient(one_player_game(), Vector{0.0});
    CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("interaction matrix rows come from the owning player's Hessian") {
    std::mt19937 rng(9);
    const QuadraticGame game = test::random_game(rng, 3);
    const InteractionMatrix im = interaction_matrix(game);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(im.h_vector[i] == game.linear_term(i)[i]);
        for (std::size_t j = 0; j < 3; ++j) CHECK(im.h_matrix(i, j) == game.hessian(i)(i, j));
    }
}

TEST_CASE("interaction matrix of the one-player game") {
    const InteractionMatrix im = interaction_matrix(one_player_game());
    CHECK(im.h_matrix(0, 0) == -2.0);
    CHECK(im.h_vector[0] == 2.0);
}

TEST_CASE("pseudo-gradient equals H theta + h") {
    std::mt19937 rng(13);
    const QuadraticGame game = test::random_game(rng, 4);
    const InteractionMatrix im = interaction_matrix(game);
    for (int trial = 0; trial < 10; ++trial) {
        const Vector theta = test::random_actions(rng, 4, -4.0, 4.0);
        const Vector lhs = pseudo_gradient(game, theta);
        const Vector rhs = im.h_matrix * theta + im.h_vector;
        CHECK(norm_inf(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("nash_equilibrium reproduces the oligopoly reference point") {
    const NashPoint nash = nash_equilibrium(reference_scenario().game);
    const Vector expected{42.8818, 40.9300, 37.8363, 35.0874};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(nash.actions[i] - expected[i]) < 1e-3);
}

TEST_CASE("nash_equilibrium on hand-solved small games") {
    CHECK(nash_equilibrium(one_player_game()).actions[0] == doctest::Approx(1.0).epsilon(1e-12));

    Matrix h1(2, 2), h2(2, 2);
    h1(0, 0) = -2;
    h1(0, 1) = h1(1, 0) = 1;
    h1(1, 1) = -1;
    h2 = h1;
    h2(1, 1) = -2;
    h2(0, 0) = -1;
    const QuadraticGame game({h1, h2}, {Vector{1, 0}, Vector{0, 1}}, Vector{0, 0});
    const NashPoint nash = nash_equilibrium(game);
    CHECK(nash.actions[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nash.actions[1] == doctest::Approx(1.0).epsilon(1e-12));
    const InteractionMatrix im = interaction_matrix(game);
    CHECK(norm_inf(im.h_matrix * nash.actions + im.h_vector) < 1e-12);
}

TEST_CASE("nash_equilibrium reports singular interaction matrices") {
    Matrix h(2, 2);
    h(0, 0) = -1;
    h(0, 1) = h(1, 0) = 1;
    h(1, 1) = -1;
    const QuadraticGame game({h, h}, {Vector{1, 0}, Vector{0, 1}}, Vector{0, 0});
    CHECK_THROWS_AS(nash_equilibrium(game), SingularMatrixError);
}

TEST_CASE("diagonal dominance report") {
    SUBCASE("oligopoly game passes") {
        const DominanceReport report = check_diagonal_dominance(reference_scenario().game);
        CHECK(report.pass);
        for (double m : report.margins) CHECK(m > 0.0);
    }
    SUBCASE("zero margin fails the strict check") {
        Matrix h1(3, 3);
        h1(0, 0) = -2;
        h1(0, 1) = h1(1, 0) = 1;
        h1(0, 2) = h1(2, 0) = 1;
        h1(1, 1) = h1(2, 2) = -3;
        Matrix h2 = h1;
        Matrix h3 = h1;
        const QuadraticGame game({h1, h2, h3},
                                 {Vector{0, 0, 0}, Vector{0, 0, 0}, Vector{0, 0, 0}},
                                 Vector{0, 0, 0});
        const DominanceReport report = check_diagonal_dominance(game);
        CHECK_FALSE(report.pass);
        CHECK(report.margins[0] == 0.0);
    }
    SUBCASE("two-player margins") {
        Matrix h1(2, 2), h2(2, 2);
        h1(0, 0) = -2;
        h1(0, 1) = h1(1, 0) = 1;
        h1(1, 1) = -2;
        h2 = h1;
        const QuadraticGame game({h1, h2}, {Vector{1, 1}, Vector{1, 1}}, Vector{0, 0});
        const DominanceReport report = check_diagonal_dominance(game);
        CHECK(report.pass);
        CHECK(report.margins[0] == doctest::Approx(1.0));
        CHECK(report.margins[1] == doctest::Approx(1.0));
    }
}

TEST_CASE("dominant random games have well-conditioned Nash solves") {
    std::mt19937 rng(21);
    int accepted = 0;
    while (accepted < 20) {
        const QuadraticGame game = test::random_game(rng, 3);
        if (!check_diagonal_dominance(game).pass) continue;
        ++accepted;
        const NashPoint nash = nash_equilibrium(game);
        const InteractionMatrix im = interaction_matrix(game);
        CHECK(norm_inf(im.h_matrix * nash.actions + im.h_vector) <
              1e-9 * (1.0 + norm_inf(im.h_vector)));
        CHECK(norm_inf(pseudo_gradient(game, nash.actions)) <
              1e-9 * (1.0 + norm_inf(im.h_vector)));
    }
}

TEST_CASE("payoff is exactly quadratic: second differences are independent of the base point") {
    std::mt19937 rng(17);
    const QuadraticGame game = test::random_game(rng, 3);
    const Vector dir = test::random_actions(rng, 3, -1.0, 1.0);
    const double s = 0.37;
    double reference = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const Vector base = test::random_actions(rng, 3, -5.0, 5.0);
        const Vector mid = base + s * dir;
        const Vector far = base + (2.0 * s) * dir;
        for (std::size_t i = 0; i < 3; ++i) {
            const double second_diff =
                payoff(game, i, far) - 2.0 * payoff(game, i, mid) + payoff(game, i, base);
            if (trial == 0 && i == 0) reference = second_diff;
        }
        const double d0 = payoff(game, 0, far) - 2.0 * payoff(game, 0, mid) + payoff(game, 0, base);
        CHECK(d0 == doctest::Approx(reference).epsilon(1e-9));
    }
}

TEST_CASE("game construction validates its invariants") {
    Matrix h(1, 1);
    h(0, 0) = 2.0;  // positive own curvature
    CHECK_THROWS_AS(QuadraticGame({h}, {Vector{0.0}}, Vector{0.0}), ValidationError);

    Matrix bad(2, 2);
    bad(0, 0) = -1;
    bad(0, 1) = 1.0;
    bad(1, 0) = 1.5;  // asymmetric beyond tolerance
    bad(1, 1) = -1;
    CHECK_THROWS_AS(QuadraticGame({bad, bad}, {Vector{0, 0}, Vector{0, 0}}, Vector{0, 0}),
                    ValidationError);

    Matrix ok(2, 2);
    ok(0, 0) = -1;
    ok(0, 1) = 1.0;
    ok(1, 0) = 1.0 + 1e-13;  // rounding noise is symmetrized away
    ok(1, 1) = -1;
    const QuadraticGame game({ok, ok}, {Vector{0, 0}, Vector{0, 0}}, Vector{0, 0});
    CHECK(game.hessian(0)(0, 1) == game.hessian(0)(1, 0));
}
