#include "nes/cli_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nes/errors.hpp"
#include "nes/lie_bracket_averaging.hpp"
#include "nes/oligopoly.hpp"
#include "nes/stability_analysis.hpp"

namespace nes {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& rule) {
    throw ValidationError(path + ": " + rule);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
}

const json& require(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) fail(path.empty() ? key : path + "." + key, "missing required key");
    return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "must be a number");
    return v.get<double>();
}

double as_positive(const json& v, const std::string& path) {
    const double x = as_number(v, path);
    if (!(x > 0.0)) fail(path, "must be positive");
    return x;
}

std::size_t as_positive_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
        fail(path, "must be a positive integer");
    return static_cast<std::size_t>(v.get<std::int64_t>());
}

Vector as_vector(const json& v, const std::string& path, std::size_t expected) {
    if (!v.is_array() || v.size() != expected)
        fail(path, "must be an array of length " + std::to_string(expected));
    Vector out(expected);
    for (std::size_t i = 0; i < expected; ++i)
        out[i] = as_number(v.at(i), path + "[" + std::to_string(i) + "]");
    return out;
}

Matrix as_matrix(const json& v, const std::string& path, std::size_t n) {
    if (!v.is_array() || v.size() != n) fail(path, "must be a " + std::to_string(n) + "-row matrix");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector row = as_vector(v.at(i), path + "[" + std::to_string(i) + "]", n);
        for (std::size_t j = 0; j < n; ++j) out(i, j) = row[j];
    }
    return out;
}

QuadraticGame parse_game(const json& g) {
    reject_unknown_keys(g, "game", {"hessians", "linear_terms", "constants"});
    const json& hessians = require(g, "game", "hessians");
    if (!hessians.is_array() || hessians.empty()) fail("game.hessians", "must be a nonempty array");
    const std::size_t n = hessians.size();

    std::vector<Matrix> hs;
    for (std::size_t i = 0; i < n; ++i)
        hs.push_back(as_matrix(hessians.at(i), "game.hessians[" + std::to_string(i) + "]", n));

    const json& linear = require(g, "game", "linear_terms");
    if (!linear.is_array() || linear.size() != n)
        fail("game.linear_terms", "must have one entry per player");
    std::vector<Vector> ls;
    for (std::size_t i = 0; i < n; ++i)
        ls.push_back(as_vector(linear.at(i), "game.linear_terms[" + std::to_string(i) + "]", n));

    const Vector cs = as_vector(require(g, "game", "constants"), "game.constants", n);

    try {
        return QuadraticGame(std::move(hs), std::move(ls), cs);
    } catch (const ValidationError& e) {
        fail("game", e.what());
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

FrequencyPlan plan_of(const Scenario& s) {
    return build_frequency_plan(s.ratios, s.base_omega);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json analyze_scenario(const Scenario& scenario) {
    const FrequencyPlan plan = plan_of(scenario);
    const NashPoint nash = nash_equilibrium(scenario.game);
    const DominanceReport dominance = check_diagonal_dominance(scenario.game);
    const StabilityReport report = analyze_stability(scenario.game, scenario.seeker);

    json discs = json::array();
    for (const auto& d : report.discs) discs.push_back({{"center", d.center}, {"radius", d.radius}});

    json nu_table = json::array();
    for (std::size_t i = 0; i < plan.n_players(); ++i)
        for (std::size_t j = 0; j < plan.n_players(); ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    nu_table.push_back({{"k", k},
                                        {"l", l},
                                        {"n_i", plan.multipliers[i]},
                                        {"n_j", plan.multipliers[j]},
                                        {"value", nu_numeric(k, l, plan.multipliers[i],
                                                             plan.multipliers[j])}});

    return json{{"theta_star", nash.actions},
                {"payoffs_at_nash", nash.payoffs},
                {"dominance", {{"margins", dominance.margins}, {"pass", dominance.pass}}},
                {"a_matrix", matrix_to_json(report.a_matrix)},
                {"discs", std::move(discs)},
                {"all_left_half_plane", report.all_left_half_plane},
                {"p_matrix", matrix_to_json(report.p_matrix)},
                {"q_matrix", matrix_to_json(report.q_matrix)},
                {"m_big", report.m_big},
                {"m_small", report.m_small},
                {"nu_table", std::move(nu_table)}};
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "scenario must be a JSON object");

    reject_unknown_keys(doc, "",
                        {"game", "seeker", "ratios", "base_omega", "theta0", "t_end",
                         "steps_per_fast_period", "record_every"});

    QuadraticGame game = parse_game(require(doc, "", "game"));
    const std::size_t n = game.n_players();

    const json& seeker_obj = require(doc, "", "seeker");
    reject_unknown_keys(seeker_obj, "seeker", {"alphas", "gains"});
    Vector alphas = as_vector(require(seeker_obj, "seeker", "alphas"), "seeker.alphas", n);
    Vector gains = as_vector(require(seeker_obj, "seeker", "gains"), "seeker.gains", n);
    std::optional<SeekerParams> seeker;
    try {
        seeker.emplace(std::move(alphas), std::move(gains));
    } catch (const ValidationError& e) {
        fail("seeker", e.what());
    }

    const json& ratios_arr = require(doc, "", "ratios");
    if (!ratios_arr.is_array() || ratios_arr.size() != n)
        fail("ratios", "must have one [p, q] pair per player");
    std::vector<RationalRatio> ratios;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string path = "ratios[" + std::to_string(i) + "]";
        const json& pair = ratios_arr.at(i);
        if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number_integer() ||
            !pair.at(1).is_number_integer())
            fail(path, "must be a two-integer array [p, q]");
        try {
            ratios.emplace_back(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
        } catch (const ValidationError& e) {
            fail(path, e.what());
        }
    }
    const auto collisions = validate_distinct(ratios);
    if (!collisions.empty())
        fail("ratios", "duplicate frequency ratios at indices " +
                           std::to_string(collisions.front().first) + " and " +
                           std::to_string(collisions.front().second) +
                           " violate the distinct-frequency assumption");

    Scenario scenario{std::move(game),
                      std::move(*seeker),
                      std::move(ratios),
                      as_positive(require(doc, "", "base_omega"), "base_omega"),
                      as_vector(require(doc, "", "theta0"), "theta0", n),
                      as_positive(require(doc, "", "t_end"), "t_end")};
    if (doc.contains("steps_per_fast_period"))
        scenario.steps_per_fast_period =
            as_positive_integer(doc.at("steps_per_fast_period"), "steps_per_fast_period");
    if (doc.contains("record_every"))
        scenario.record_every = as_positive_integer(doc.at("record_every"), "record_every");
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    const std::size_t n = scenario.game.n_players();
    json hessians = json::array();
    json linear_terms = json::array();
    json constants = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        hessians.push_back(matrix_to_json(scenario.game.hessian(i)));
        linear_terms.push_back(scenario.game.linear_term(i));
        constants.push_back(scenario.game.constant(i));
    }
    json ratios = json::array();
    for (const auto& r : scenario.ratios) ratios.push_back({r.p, r.q});

    const json doc{{"game",
                    {{"hessians", std::move(hessians)},
                     {"linear_terms", std::move(linear_terms)},
                     {"constants", std::move(constants)}}},
                   {"seeker", {{"alphas", scenario.seeker.alphas}, {"gains", scenario.seeker.gains}}},
                   {"ratios", std::move(ratios)},
                   {"base_omega", scenario.base_omega},
                   {"theta0", scenario.theta0},
                   {"t_end", scenario.t_end},
                   {"steps_per_fast_period", scenario.steps_per_fast_period},
                   {"record_every", scenario.record_every}};
    return doc.dump(2) + "\n";
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",theta_" << i;
    if (!traj.payoffs.empty())
        for (std::size_t i = 1; i <= n; ++i) out << ",J_" << i;
    out << "\n";
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        out << format_double(traj.times[s]);
        for (double v : traj.states[s]) out << "," << format_double(v);
        if (!traj.payoffs.empty())
            for (double v : traj.payoffs[s]) out << "," << format_double(v);
        out << "\n";
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "omega_tilde,sup_error\n";
    for (std::size_t i = 0; i < result.omega_tildes.size(); ++i)
        out << format_double(result.omega_tildes[i]) << ","
            << format_double(result.sup_errors[i]) << "\n";
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Nash equilibrium seeking toolkit"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, out_csv, out_json, emit_path, multipliers_text;
    double t_end_override = 0.0;

    auto* analyze = app.add_subcommand("analyze", "stability report for a scenario");
    analyze->add_option("scenario", scenario_path)->required();
    analyze->add_option("--out", out_path);

    auto* simulate = app.add_subcommand("simulate", "oscillatory seeker trajectory CSV");
    simulate->add_option("scenario", scenario_path)->required();
    simulate->add_option("--out", out_path);

    auto* average = app.add_subcommand("average", "closed-form averaged trajectory CSV");
    average->add_option("scenario", scenario_path)->required();
    average->add_option("--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "frequency sweep of the averaging error");
    sweep->add_option("scenario", scenario_path)->required();
    sweep->add_option("--multipliers", multipliers_text, "comma-separated integers")->required();
    sweep->add_option("--out-csv", out_csv);
    sweep->add_option("--out-json", out_json);
    sweep->add_option("--t-end", t_end_override);

    auto* oligopoly = app.add_subcommand("oligopoly", "emit the reference four-firm scenario");
    oligopoly->add_option("--emit", emit_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (*oligopoly) {
            const ScenarioBundle bundle = reference_scenario();
            const Scenario scenario{bundle.game,        bundle.seeker, bundle.plan.ratios,
                                    bundle.plan.base_omega, bundle.theta0, bundle.t_end};
            emit(serialize_scenario(scenario), emit_path);
            return 0;
        }

        const Scenario scenario = load_scenario_file(scenario_path);
        const FrequencyPlan plan = plan_of(scenario);

        if (*analyze) {
            emit(analyze_scenario(scenario).dump(2) + "\n", out_path);
        } else if (*simulate) {
            const Trajectory traj =
                run_seeker(scenario.game, scenario.seeker, plan, scenario.theta0, scenario.t_end,
                           scenario.steps_per_fast_period, scenario.record_every);
            std::ostringstream csv;
            write_trajectory_csv(csv, traj);
            emit(csv.str(), out_path);
        } else if (*average) {
            // Same recording grid the simulate command would produce.
            const double omega_max =
                *std::max_element(plan.omegas.begin(), plan.omegas.end());
            const double step = 2.0 * std::numbers::pi /
                                (omega_max * static_cast<double>(scenario.steps_per_fast_period));
            std::vector<double> times{0.0};
            const double record_step = step * static_cast<double>(scenario.record_every);
            for (double t = record_step; t < scenario.t_end; t += record_step) times.push_back(t);
            if (times.back() < scenario.t_end) times.push_back(scenario.t_end);

            const ErrorMatrix em = error_matrix(scenario.game, scenario.seeker);
            const Vector theta_star = nash_equilibrium(scenario.game).actions;
            const Trajectory traj = closed_form_averaged(em, scenario.theta0, theta_star, times);
            std::ostringstream csv;
            write_trajectory_csv(csv, traj);
            emit(csv.str(), out_path);
        } else if (*sweep) {
            std::vector<std::int64_t> multipliers;
            std::stringstream ss(multipliers_text);
            std::string token;
            while (std::getline(ss, token, ','))
                multipliers.push_back(std::stoll(token));

            const double t_end = t_end_override > 0.0 ? t_end_override : scenario.t_end;
            const SweepResult result =
                convergence_sweep(scenario.game, scenario.seeker, plan, multipliers,
                                  scenario.theta0, t_end, scenario.steps_per_fast_period);

            std::ostringstream csv;
            write_sweep_csv(csv, result);
            emit(csv.str(), out_csv);
            const json summary{{"omega_tildes", result.omega_tildes},
                               {"sup_errors", result.sup_errors},
                               {"loglog_slope", result.loglog_slope},
                               {"monotone_decreasing", result.monotone_decreasing}};
            emit(summary.dump(2) + "\n", out_json);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        dummy.exit(e);
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nes
