#include "nes/oligopoly.hpp"

#include "nes/errors.hpp"

namespace nes {

namespace {

constexpr std::size_t kFirms = 4;

// Product of all resistances except the listed indices.
double product_excluding(const std::array<double, 4>& r, std::size_t a,
                         std::size_t b = kFirms) {
    double p = 1.0;
    for (std::size_t j = 0; j < kFirms; ++j)
        if (j != a && j != b) p *= r[j];
    return p;
}

}  // namespace

QuadraticGame build_oligopoly(const OligopolyParams& params) {
    for (double r : params.resistances)
        if (!(r > 0.0)) throw ValidationError("oligopoly: resistances must be positive");
    for (double m : params.marginal_costs)
        if (!(m > 0.0)) throw ValidationError("oligopoly: marginal costs must be positive");
    if (!(params.total_demand > 0.0))
        throw ValidationError("oligopoly: total demand must be positive");

    const auto& r = params.resistances;
    double denom = 0.0;
    for (std::size_t i = 0; i < kFirms; ++i) denom += product_excluding(r, i);

    std::vector<Matrix> hessians;
    std::vector<Vector> linear_terms;
    Vector constants(kFirms);
    for (std::size_t i = 0; i < kFirms; ++i) {
        const double m_i = params.marginal_costs[i];
        // Sum of pairwise resistance products among the other three firms.
        double pair_sum = 0.0;
        for (std::size_t j = 0; j < kFirms; ++j)
            if (j != i) pair_sum += product_excluding(r, i, j);

        Matrix h(kFirms, kFirms);
        h(i, i) = -2.0 * pair_sum / denom;
        Vector lin(kFirms);
        lin[i] = (m_i * pair_sum + params.total_demand * product_excluding(r, i)) / denom;
        for (std::size_t j = 0; j < kFirms; ++j) {
            if (j == i) continue;
            h(i, j) = h(j, i) = product_excluding(r, i, j) / denom;
            lin[j] = -m_i * product_excluding(r, i, j) / denom;
        }
        constants[i] = -m_i * params.total_demand * product_excluding(r, i) / denom;

        hessians.push_back(std::move(h));
        linear_terms.push_back(std::move(lin));
    }
    return QuadraticGame(std::move(hessians), std::move(linear_terms), std::move(constants));
}

ScenarioBundle reference_scenario() {
    const OligopolyParams params{{0.15, 0.30, 0.60, 1.0}, {30.0, 30.0, 25.0, 20.0}, 100.0};
    QuadraticGame game = build_oligopoly(params);
    SeekerParams seeker(Vector{0.05, 0.05, 0.05, 0.05}, Vector{6.0, 18.0, 10.0, 24.0});
    FrequencyPlan plan = build_frequency_plan(
        {RationalRatio(30, 1), RationalRatio(24, 1), RationalRatio(44, 1), RationalRatio(36, 1)},
        1.0);
    return ScenarioBundle{std::move(game), std::move(seeker), std::move(plan),
                          Vector{52.0, 40.93, 33.5, 35.09}, 100.0};
}

}  // namespace nes
