#include <doctest.h>

#include <cmath>
#include <random>

#include "nes/errors.hpp"
#include "nes/oligopoly.hpp"
#include "nes/stability_analysis.hpp"

using namespace nes;

namespace {

const OligopolyParams kReference{{0.15, 0.30, 0.60, 1.0}, {30.0, 30.0, 25.0, 20.0}, 100.0};

}  // namespace

TEST_CASE("reference oligopoly reproduces the published equilibrium") {
    const QuadraticGame game = build_oligopoly(kReference);
    const NashPoint nash = nash_equilibrium(game);
    const Vector prices{42.8818, 40.9300, 37.8363, 35.0874};
    const Vector profits{524.0208, 293.4217, 238.4846, 209.6584};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::fabs(nash.actions[i] - prices[i]) < 1e-3);
        CHECK(std::fabs(nash.payoffs[i] - profits[i]) < 1e-3);
    }
}

TEST_CASE("identical firms share a price at equilibrium") {
    const OligopolyParams symmetric{{1.0, 1.0, 1.0, 1.0}, {10.0, 10.0, 10.0, 10.0}, 40.0};
    const NashPoint nash = nash_equilibrium(build_oligopoly(symmetric));
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(nash.actions[i] == doctest::Approx(nash.actions[0]).epsilon(1e-12));
}

TEST_CASE("random oligopolies have the demanded structure") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> resistance(0.1, 2.0);
    std::uniform_real_distribution<double> cost(1.0, 50.0);
    std::uniform_real_distribution<double> demand(10.0, 500.0);
    for (int trial = 0; trial < 100; ++trial) {
        OligopolyParams params{{resistance(rng), resistance(rng), resistance(rng),
                                resistance(rng)},
                               {cost(rng), cost(rng), cost(rng), cost(rng)},
                               demand(rng)};
        const QuadraticGame game = build_oligopoly(params);
        CHECK(check_diagonal_dominance(game).pass);
        const InteractionMatrix im = interaction_matrix(game);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(game.hessian(i)(i, i) < 0.0);
            CHECK(game.hessian(i) == transpose(game.hessian(i)));
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(im.h_matrix(i, j) == doctest::Approx(im.h_matrix(j, i)).epsilon(1e-12));
                if (i != j) CHECK(im.h_matrix(i, j) > 0.0);
            }
        }
    }
}

namespace {

// Independent sales oracle, written straight from the demand model:
// consumers flow toward cheaper products through pairwise resistances, so
//   sales_i = [S_d prod_{j!=i} R_j + sum_{j!=i} (theta_j - theta_i) prod_{l!=i,j} R_l] / D
// with D the sum of the triple products.
double sales_oracle(const OligopolyParams& params, std::size_t i, const Vector& theta) {
    const auto& r = params.resistances;
    auto prod_excl = [&r](std::size_t a, std::size_t b) {
        double p = 1.0;
        for (std::size_t l = 0; l < 4; ++l)
            if (l != a && l != b) p *= r[l];
        return p;
    };
    double d = 0.0;
    for (std::size_t j = 0; j < 4; ++j) d += prod_excl(j, j);
    double s = params.total_demand * prod_excl(i, i);
    for (std::size_t j = 0; j < 4; ++j)
        if (j != i) s += (theta[j] - theta[i]) * prod_excl(i, j);
    return s / d;
}

}  // namespace

TEST_CASE("oligopoly payoff equals the literal profit expression") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> price(10.0, 80.0);
    const QuadraticGame game = build_oligopoly(kReference);
    for (int trial = 0; trial < 50; ++trial) {
        Vector theta(4);
        for (double& x : theta) x = price(rng);
        for (std::size_t i = 0; i < 4; ++i) {
            const double profit = (theta[i] - kReference.marginal_costs[i]) *
                                  sales_oracle(kReference, i, theta);
            CHECK(payoff(game, i, theta) == doctest::Approx(profit).epsilon(1e-12));
        }
    }
}

TEST_CASE("sales at the reference equilibrium are positive and exhaust demand") {
    const NashPoint nash = nash_equilibrium(build_oligopoly(kReference));
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double s = sales_oracle(kReference, i, nash.actions);
        CHECK(s > 0.0);
        total += s;
    }
    CHECK(total == doctest::Approx(kReference.total_demand).epsilon(1e-10));
}

TEST_CASE("oligopoly builder validates parameters") {
    OligopolyParams params = kReference;
    params.resistances[2] = 0.0;
    CHECK_THROWS_AS(build_oligopoly(params), ValidationError);
    params = kReference;
    params.marginal_costs[0] = -1.0;
    CHECK_THROWS_AS(build_oligopoly(params), ValidationError);
    params = kReference;
    params.total_demand = 0.0;
    CHECK_THROWS_AS(build_oligopoly(params), ValidationError);
}

TEST_CASE("reference scenario bundle is internally consistent") {
    const ScenarioBundle bundle = reference_scenario();
    CHECK(bundle.game == build_oligopoly(kReference));
    CHECK(bundle.plan.q_product == 1);
    CHECK(bundle.plan.omega_tilde == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bundle.plan.multipliers == std::vector<std::int64_t>{30, 24, 44, 36});
    CHECK(bundle.seeker.alphas == Vector{0.05, 0.05, 0.05, 0.05});
    CHECK(bundle.seeker.gains == Vector{6.0, 18.0, 10.0, 24.0});
    CHECK(bundle.theta0 == Vector{52.0, 40.93, 33.5, 35.09});
    CHECK(bundle.t_end == 100.0);
    const StabilityReport report = analyze_stability(bundle.game, bundle.seeker);
    CHECK(report.all_left_half_plane);
}
