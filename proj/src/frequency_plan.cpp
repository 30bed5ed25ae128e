#include "nes/frequency_plan.hpp"

#include <numeric>
#include <string>

#include "nes/errors.hpp"

namespace nes {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw ValidationError("frequency plan: integer overflow in multiplier product");
    return out;
}

}  // namespace

RationalRatio::RationalRatio(std::int64_t p_in, std::int64_t q_in) : p(p_in), q(q_in) {
    if (p <= 0 || q <= 0)
        throw ValidationError("rational ratio must have positive numerator and denominator");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
}

std::vector<std::pair<std::size_t, std::size_t>> validate_distinct(
    const std::vector<RationalRatio>& ratios) {
    std::vector<std::pair<std::size_t, std::size_t>> collisions;
    for (std::size_t i = 0; i < ratios.size(); ++i)
        for (std::size_t j = i + 1; j < ratios.size(); ++j)
            if (ratios[i] == ratios[j]) collisions.emplace_back(i, j);
    return collisions;
}

FrequencyPlan build_frequency_plan(const std::vector<RationalRatio>& ratios,
                                   double base_omega) {
    if (ratios.empty()) throw ValidationError("frequency plan needs at least one ratio");
    if (!(base_omega > 0.0)) throw ValidationError("base_omega must be positive");

    const auto collisions = validate_distinct(ratios);
    if (!collisions.empty())
        throw ValidationError("frequency ratios must be pairwise distinct; ratios " +
                              std::to_string(collisions.front().first + 1) + " and " +
                              std::to_string(collisions.front().second + 1) +
                              " coincide after reduction");

    FrequencyPlan plan;
    plan.base_omega = base_omega;
    plan.ratios = ratios;

    plan.q_product = 1;
    for (const auto& r : ratios) plan.q_product = checked_mul(plan.q_product, r.q);
    plan.omega_tilde = base_omega / static_cast<double>(plan.q_product);

    const std::size_t n = ratios.size();
    plan.multipliers.resize(n);
    plan.omegas.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t m = ratios[i].p;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) m = checked_mul(m, ratios[j].q);
        plan.multipliers[i] = m;
        plan.omegas[i] = ratios[i].value() * base_omega;
    }
    return plan;
}

}  // namespace nes
