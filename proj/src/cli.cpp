#include <gwci/cli.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <gwci/acceptance.hpp>
#include <gwci/errors.hpp>
#include <gwci/format.hpp>
#include <gwci/serialize.hpp>

namespace gwci::cli {

namespace {

struct Output {
    std::string text;
    json data;
    bool failed = false; // selftest with a failing criterion
};

CIModel model_of(const RunConfig &cfg)
{
    return classify(cfg.n, cfg.degrees);
}

void require_degrees(const RunConfig &cfg)
{
    if (cfg.degrees.empty()) {
        throw std::invalid_argument(cfg.command + " needs at least one --l");
    }
}

LaurentPoly correlator_of(const CIModel &model, int d)
{
    switch (model.classification) {
    case Classification::fano_index_ge2:
        return fano_ge2_correlator(model, d);
    case Classification::fano_index_one:
        return fano_index1_correlator(model, d);
    case Classification::calabi_yau:
        return cy_correlator(model, d);
    case Classification::general_type:
        break;
    }
    require_classification(model, Classification::calabi_yau);
    return LaurentPoly(model.ring());
}

Output do_phi(const RunConfig &cfg)
{
    const CIModel model = model_of(cfg);
    const LaurentPoly p = phi(model, cfg.d);
    return {to_string(p), {{"model", model_to_json(model)}, {"d", cfg.d}, {"phi", laurent_to_json(p)}}};
}

Output do_correlator(const RunConfig &cfg)
{
    const CIModel model = model_of(cfg);
    const LaurentPoly p = correlator_of(model, cfg.d);
    return {to_string(p), {{"model", model_to_json(model)}, {"d", cfg.d}, {"correlator", laurent_to_json(p)}}};
}

Output do_invariant(const RunConfig &cfg)
{
    const CIModel model = model_of(cfg);
    const Rational value = one_point_invariant(correlator_of(model, cfg.d), cfg.a, cfg.b);
    return {value.to_string(),
            {{"model", model_to_json(model)},
             {"d", cfg.d},
             {"a", cfg.a},
             {"b", cfg.b},
             {"value", rational_to_json(value)}}};
}

Output do_cy(const RunConfig &cfg)
{
    require_degrees(cfg);
    const CIModel model = model_of(cfg);
    require_classification(model, Classification::calabi_yau);
    CalabiYauSolver solver(model);
    solver.solve_through(cfg.max_degree);

    std::ostringstream text;
    json lambdas = json::array();
    json correlators = json::array();
    for (int d = 1; d <= cfg.max_degree; ++d) {
        const LambdaForm &l = solver.lambda(d);
        text << "lambda_" << d << " = " << to_string(l) << "\n";
        json entry = lambda_to_json(l);
        entry["d"] = d;
        lambdas.push_back(entry);
    }
    for (int d = 0; d <= cfg.max_degree; ++d) {
        const LaurentPoly &c = solver.correlator(d);
        text << "[S]_" << d << " = " << to_string(c) << "\n";
        correlators.push_back({{"d", d}, {"value", laurent_to_json(c)}});
    }
    std::string s = text.str();
    s.pop_back();
    return {s, {{"model", model_to_json(model)}, {"lambdas", lambdas}, {"correlators", correlators}}};
}

Output do_quintic(const RunConfig &cfg)
{
    const auto report = quintic_report(cfg.max_degree);
    std::ostringstream text;
    text << "d  n_d  m_d  N_d  lambda_d";
    for (const auto &row : report.degrees) {
        text << "\n" << row.d << "  " << row.n_d.to_string() << "  " << row.m_d.to_string() << "  "
             << row.N_d.to_string() << "  " << to_string(row.lambda);
    }
    return {text.str(), report_to_json(report)};
}

Output do_mirror(const RunConfig &cfg)
{
    require_degrees(cfg);
    const CIModel model = model_of(cfg);
    const auto report = verify_mirror_identity(model, cfg.max_degree);
    std::ostringstream text;
    for (const auto &[e, a] : report.data.a) {
        text << "a_" << e << " = " << a.to_string() << ", b_" << e << " = " << report.data.b.at(e).to_string() << "\n";
    }
    if (report.holds) {
        text << "mirror identity holds through q^" << cfg.max_degree;
    } else {
        text << "mirror identity FAILS";
        if (report.first_failing_degree) {
            text << " at q^" << *report.first_failing_degree;
        }
    }
    Output out{text.str(), mirror_to_json(model, report, cfg.max_degree)};
    out.failed = !report.holds;
    return out;
}

RelativeModel relative_model_of(const RunConfig &cfg, std::vector<int> degrees)
{
    return RelativeModel(cfg.n, cfg.base_cutoff, std::move(degrees),
                         cfg.trivial_bundle ? BundleKind::trivial : BundleKind::formal);
}

json relative_header(const RelativeModel &model)
{
    return {{"n", model.n()},
            {"cutoff", model.base_cutoff()},
            {"degrees", model.degrees()},
            {"bundle", model.kind() == BundleKind::trivial ? "trivial" : "formal"}};
}

Output do_relative(const RunConfig &cfg)
{
    const std::string &sub = cfg.relative_command;
    if (sub == "euler" || sub == "phi") {
        const RelativeModel model = relative_model_of(cfg, cfg.degrees);
        const LaurentPoly p = sub == "euler" ? relative_euler(model, cfg.d) : relative_phi(model, cfg.d);
        json j = relative_header(model);
        j["d"] = cfg.d;
        j[sub] = laurent_to_json(p);
        return {to_string(p), j};
    }
    if (sub == "porteous") {
        const RelativeModel model = relative_model_of(cfg, cfg.degrees);
        const BaseClass lines = porteous_lines(model);
        const BaseClass formula = porteous_formula(model);
        json j = relative_header(model);
        j["lines"] = base_to_json(lines);
        j["formula"] = base_to_json(formula);
        j["agrees"] = lines == formula;
        Output out{"lines = " + to_string(lines) + "\nformula = " + to_string(formula), j};
        out.failed = !(lines == formula);
        return out;
    }
    // linear-cy
    const RelativeModel model = relative_model_of(cfg, std::vector<int>(cfg.n + 1, 1));
    const int D = std::max(cfg.max_degree, 1);
    std::ostringstream text;
    json lambdas = json::array();
    for (int e = 1; e <= D; ++e) {
        const RelativeLambda l = linear_cy_lambda(model, e);
        text << "lambda_" << e << " = " << l.t_coefficient.to_string() << "*t + (" << to_string(l.constant) << ")\n";
        lambdas.push_back({{"e", e}, {"t", rational_to_json(l.t_coefficient)}, {"constant", base_to_json(l.constant)}});
    }
    json pushforwards = json::array();
    bool all_match = true;
    for (int d = 1; d <= D; ++d) {
        const CohClass value = linear_cy_pushforward(model, d, D);
        const bool match = value == linear_cy_expected(model, d);
        all_match = all_match && match;
        text << "[t^-2] q^" << d << " = " << to_string(value) << (match ? "" : "  (MISMATCH)") << "\n";
        pushforwards.push_back({{"d", d}, {"value", laurent_to_json(LaurentPoly(value))}, {"matches_closed_form", match}});
    }
    std::string s = text.str();
    s.pop_back();
    json j = relative_header(model);
    j["lambdas"] = lambdas;
    j["pushforwards"] = pushforwards;
    Output out{s, j};
    out.failed = !all_match;
    return out;
}

Output do_selftest(const RunConfig &cfg)
{
    const auto results = run_acceptance(cfg.criterion);
    std::string text;
    json rows = json::array();
    bool failed = false;
    for (const auto &r : results) {
        text += (text.empty() ? "" : "\n") + format_result(r);
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        failed = failed || !r.passed;
    }
    Output out{text, {{"criteria", rows}}};
    out.failed = failed;
    return out;
}

Output dispatch(const RunConfig &cfg)
{
    if (cfg.command == "phi") {
        return do_phi(cfg);
    }
    if (cfg.command == "correlator") {
        return do_correlator(cfg);
    }
    if (cfg.command == "invariant") {
        return do_invariant(cfg);
    }
    if (cfg.command == "cy") {
        return do_cy(cfg);
    }
    if (cfg.command == "quintic") {
        return do_quintic(cfg);
    }
    if (cfg.command == "mirror") {
        return do_mirror(cfg);
    }
    if (cfg.command == "relative") {
        return do_relative(cfg);
    }
    return do_selftest(cfg);
}

void add_common(CLI::App *app, RunConfig &cfg, std::string &format)
{
    app->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", cfg.out_path, "also write the JSON result to this file");
}

void add_model(CLI::App *app, RunConfig &cfg, bool degrees_required)
{
    app->add_option("--n", cfg.n, "ambient dimension")->required()->check(CLI::PositiveNumber);
    auto *l = app->add_option("--l", cfg.degrees, "hypersurface degree, repeatable")->check(CLI::PositiveNumber);
    if (degrees_required) {
        l->required();
    }
}

void add_d(CLI::App *app, RunConfig &cfg)
{
    app->add_option("--d", cfg.d, "curve degree")->required()->check(CLI::NonNegativeNumber);
}

void add_max_d(CLI::App *app, RunConfig &cfg)
{
    app->add_option("--max-d", cfg.max_degree, "largest curve degree")->check(CLI::NonNegativeNumber);
}

void add_relative(CLI::App *app, RunConfig &cfg)
{
    app->add_option("--cutoff", cfg.base_cutoff, "base ring truncation degree")->check(CLI::NonNegativeNumber);
    app->add_flag("--trivial", cfg.trivial_bundle, "use the trivial bundle (all s_i = 0)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    std::string format = "text";

    CLI::App app{"Genus-zero one-point invariants of complete intersections", "gw"};
    app.require_subcommand(1);

    auto *phi_cmd = app.add_subcommand("phi", "hypergeometric series phi_d");
    add_model(phi_cmd, cfg, false);
    add_d(phi_cmd, cfg);

    auto *corr_cmd = app.add_subcommand("correlator", "one-point correlator [S]_d");
    add_model(corr_cmd, cfg, false);
    add_d(corr_cmd, cfg);

    auto *inv_cmd = app.add_subcommand("invariant", "integral of psi^a h^b against [S]_d");
    add_model(inv_cmd, cfg, false);
    add_d(inv_cmd, cfg);
    inv_cmd->add_option("--a", cfg.a, "psi power")->required()->check(CLI::NonNegativeNumber);
    inv_cmd->add_option("--b", cfg.b, "hyperplane power")->required()->check(CLI::NonNegativeNumber);

    auto *cy_cmd = app.add_subcommand("cy", "calabi-yau correlators and lambda table");
    add_model(cy_cmd, cfg, true);
    add_max_d(cy_cmd, cfg);

    auto *quintic_cmd = app.add_subcommand("quintic", "quintic threefold counts");
    add_max_d(quintic_cmd, cfg);

    auto *mirror_cmd = app.add_subcommand("mirror", "mirror-map coefficients and identity check");
    add_model(mirror_cmd, cfg, true);
    add_max_d(mirror_cmd, cfg);

    auto *rel_cmd = app.add_subcommand("relative", "complete intersections in a projective bundle");
    rel_cmd->require_subcommand(1);
    auto *euler_cmd = rel_cmd->add_subcommand("euler", "equivariant euler class of the degree-d normal data");
    add_model(euler_cmd, cfg, false);
    add_relative(euler_cmd, cfg);
    add_d(euler_cmd, cfg);
    auto *rphi_cmd = rel_cmd->add_subcommand("phi", "relative phi_d");
    add_model(rphi_cmd, cfg, false);
    add_relative(rphi_cmd, cfg);
    add_d(rphi_cmd, cfg);
    auto *port_cmd = rel_cmd->add_subcommand("porteous", "class of lines in a linear section");
    add_model(port_cmd, cfg, true);
    add_relative(port_cmd, cfg);
    auto *lin_cmd = rel_cmd->add_subcommand("linear-cy", "n+1 sections of O(1)");
    lin_cmd->add_option("--n", cfg.n, "fiber dimension")->required()->check(CLI::PositiveNumber);
    add_relative(lin_cmd, cfg);
    add_max_d(lin_cmd, cfg);

    auto *self_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
    self_cmd->add_option("--criterion", cfg.criterion, "run only this criterion")
        ->check(CLI::Range(1, acceptance_criterion_count));

    for (auto *sub : {phi_cmd, corr_cmd, inv_cmd, cy_cmd, quintic_cmd, mirror_cmd, euler_cmd, rphi_cmd, port_cmd,
                      lin_cmd, self_cmd}) {
        add_common(sub, cfg, format);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage_error;
    }

    for (auto *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    for (auto *sub : rel_cmd->get_subcommands()) {
        cfg.relative_command = sub->get_name();
    }
    cfg.format = format == "json" ? Format::json : Format::text;

    Output result;
    try {
        result = dispatch(cfg);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage_error;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::math_error;
    } catch (const std::logic_error &e) {
        err << "internal error: " << e.what() << "\n";
        return ExitCode::math_error;
    }

    out << (cfg.format == Format::json ? result.data.dump(2) : result.text) << "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return ExitCode::usage_error;
        }
        file << result.data.dump(2) << "\n";
    }
    return result.failed ? ExitCode::math_error : ExitCode::ok;
}

} // namespace gwci::cli
