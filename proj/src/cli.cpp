#include "xtropy/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xtropy/closed_forms.hpp"
#include "xtropy/harness.hpp"
#include "xtropy/montecarlo.hpp"

namespace xtropy {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string method_string(MethodChoice m) {
    switch (m) {
        case MethodChoice::quad: return "quad";
        case MethodChoice::closed: return "closed";
        case MethodChoice::mc: return "mc";
    }
    return "?";
}

std::string output_string(OutputFormat o) {
    switch (o) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::tsv: return "tsv";
    }
    return "?";
}

std::string command_string(Command c) {
    switch (c) {
        case Command::compute: return "compute";
        case Command::rss: return "rss";
        case Command::srs: return "srs";
        case Command::compare: return "compare";
        case Command::sample: return "sample";
        case Command::verify: return "verify";
        case Command::table: return "table";
    }
    return "?";
}

// Simple row-based rendering shared by csv and tsv.
struct Rows {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> data;

    static std::string quote(const std::string& field, char sep) {
        if (field.find(sep) == std::string::npos && field.find('"') == std::string::npos)
            return field;
        std::string quoted = "\"";
        for (char c : field) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }

    void emit(std::ostream& out, char sep) const {
        for (size_t j = 0; j < header.size(); ++j)
            out << quote(header[j], sep) << (j + 1 < header.size() ? std::string(1, sep) : "\n");
        for (const auto& row : data)
            for (size_t j = 0; j < row.size(); ++j)
                out << quote(row[j], sep) << (j + 1 < row.size() ? std::string(1, sep) : "\n");
    }
};

void write_output(const RunConfig& config, const json& doc, const Rows& rows,
                  std::ostream& out) {
    if (config.output == OutputFormat::json)
        out << doc.dump(2) << "\n";
    else
        rows.emit(out, config.output == OutputFormat::csv ? ',' : '\t');
}

// Closed-form RSS value for the families covered by the worked examples.
ClosedFormReport closed_rss(const DistPtr& dist, const WeightFunction& w, int n) {
    double m = 0.0;
    if (w.kind() == WeightKind::power)
        m = w.exponent();
    else if (w.kind() != WeightKind::unit)
        throw InvalidParameter("closed forms cover unit and pow:m weights only");

    const std::string spec = dist->spec();
    if (spec.rfind("power:", 0) == 0)
        return power_rss_closed(std::strtod(spec.c_str() + 6, nullptr), m, n);
    if (spec == "linear-rising") return power_rss_closed(2.0, m, n);
    if (spec.rfind("exp:", 0) == 0) {
        if (m != std::floor(m))
            throw InvalidParameter("exponential closed form needs integer m");
        return exponential_rss_closed(std::strtod(spec.c_str() + 4, nullptr),
                                      static_cast<int>(m), n);
    }
    if (spec.rfind("pareto:", 0) == 0)
        return pareto_rss_closed(std::strtod(spec.c_str() + 7, nullptr), m, n);
    if (spec == "linear-falling" && n == 1)
        return ClosedFormReport{linear_pair_values(m).second, FormulaId::linear_pair, false};
    throw InvalidParameter("no closed form for " + spec + " with weight " + w.spec());
}

json report_json(const TheoremReport& r) {
    return json{{"theorem_id", r.theorem_id},
                {"cases_run", r.cases_run},
                {"cases_passed", r.cases_passed},
                {"cases_skipped", r.cases_skipped},
                {"applicable", r.applicable},
                {"worst_margin", r.worst_margin},
                {"witness", r.witness},
                {"pass", r.pass()}};
}

int run_scalar_command(const RunConfig& config, std::ostream& out) {
    const DistPtr dist = parse_distribution(config.dist_spec);
    const WeightFunction w = parse_weight(config.weight_spec);
    const int n = config.command == Command::compute ? 1 : config.n;

    json doc{{"command", command_string(config.command)},
             {"dist", dist->spec()},
             {"weight", w.spec()},
             {"n", n}};
    Rows rows;
    rows.header = {"command", "dist", "weight", "n", "method", "value", "error", "reason"};

    double value = 0.0, error = 0.0;
    std::string method;
    try {
        switch (config.method) {
            case MethodChoice::quad: {
                ExtropyValue v;
                if (config.command == Command::compute)
                    v = general_weighted_extropy(dist, w, config.tol);
                else if (config.command == Command::srs)
                    v = srs_extropy(dist, w, n, config.tol);
                else
                    v = rss_extropy(dist, w, n, config.tol);
                value = v.value;
                error = v.error_estimate;
                method = method_name(v.method);
                if (!v.note.empty()) doc["note"] = v.note;
                break;
            }
            case MethodChoice::closed: {
                if (config.command == Command::srs) {
                    const double j1 = closed_rss(dist, w, 1).value;
                    value = -0.5 * std::pow(-2.0 * j1, n);
                } else {
                    value = closed_rss(dist, w, n).value;
                }
                error = 0.0;
                method = method_name(Method::closed_form);
                break;
            }
            case MethodChoice::mc: {
                McEstimate e;
                if (config.command == Command::compute)
                    e = mc_general_weighted_extropy(dist, w, config.draws,
                                                    RngSpec{config.seed, 0});
                else if (config.command == Command::srs) {
                    const McEstimate one = mc_general_weighted_extropy(
                        dist, w, config.draws, RngSpec{config.seed, 0});
                    const double mean = -2.0 * one.value;
                    e.value = -0.5 * std::pow(mean, n);
                    e.std_error = n * std::pow(std::abs(mean), n - 1) * one.std_error;
                    e.n_draws = one.n_draws;
                } else {
                    e = mc_rss_extropy(dist, w, n, config.draws, RngSpec{config.seed, 0});
                }
                value = e.value;
                error = e.std_error;
                method = method_name(Method::monte_carlo);
                doc["draws"] = e.n_draws;
                if (e.sign_indeterminate) doc["note"] = "factor sign indeterminate";
                break;
            }
        }
    } catch (const ConvergenceError& e) {
        doc["method"] = method_string(config.method);
        doc["value"] = nullptr;
        doc["reason"] = e.what();
        rows.data.push_back({command_string(config.command), dist->spec(), w.spec(),
                             std::to_string(n), method_string(config.method), "", "",
                             e.what()});
        write_output(config, doc, rows, out);
        return 2;
    }

    doc["method"] = method;
    doc["value"] = value;
    doc["error"] = error;
    rows.data.push_back({command_string(config.command), dist->spec(), w.spec(),
                         std::to_string(n), method, fmt17(value), fmt17(error), ""});
    write_output(config, doc, rows, out);
    return 0;
}

int run_compare(const RunConfig& config, std::ostream& out) {
    const DistPtr X = parse_distribution(config.dist_spec);
    const DistPtr Y = parse_distribution(
        config.dist2_spec.empty() ? config.dist_spec : config.dist2_spec);
    const WeightFunction w1 = parse_weight(config.weight_spec);
    const WeightFunction w2 = parse_weight(
        config.weight2_spec.empty() ? config.weight_spec : config.weight2_spec);

    const ExtropyValue jx = general_weighted_extropy(X, w1, config.tol);
    const ExtropyValue jy = general_weighted_extropy(Y, w2, config.tol);
    const ExtropyValue rx = rss_extropy(X, w1, config.n, config.tol);
    const ExtropyValue ry = rss_extropy(Y, w2, config.n, config.tol);

    json orders;
    for (StochasticOrder o : {StochasticOrder::st, StochasticOrder::disp,
                              StochasticOrder::convex_transform, StochasticOrder::star,
                              StochasticOrder::superadditive}) {
        const OrderVerdict v = check_order(o, X, Y);
        orders[order_name(o)] = json{{"holds", v.holds}, {"worst_violation", v.worst_violation}};
    }
    const DeltaCriterionResult delta =
        delta_criterion(X, Y, w1, w2, config.n, 1024, config.tol);

    json doc{{"command", "compare"},
             {"dist", X->spec()},
             {"dist2", Y->spec()},
             {"weight", w1.spec()},
             {"weight2", w2.spec()},
             {"n", config.n},
             {"method", "quadrature"},
             {"value", jx.value},
             {"error", jx.error_estimate},
             {"value2", jy.value},
             {"error2", jy.error_estimate},
             {"rss_value", rx.value},
             {"rss_error", rx.error_estimate},
             {"rss_value2", ry.value},
             {"rss_error2", ry.error_estimate},
             {"extropy_ordered", jx.value <= jy.value + kConclusionSlack},
             {"rss_ordered", rx.value <= ry.value + kConclusionSlack},
             {"orders", orders},
             {"delta_hypothesis", delta.hypothesis_holds},
             {"delta_conclusion", delta.conclusion_holds}};

    Rows rows;
    rows.header = {"quantity", "X", "Y"};
    rows.data.push_back({"extropy", fmt17(jx.value), fmt17(jy.value)});
    rows.data.push_back({"rss_extropy", fmt17(rx.value), fmt17(ry.value)});
    write_output(config, doc, rows, out);
    return 0;
}

int run_sample(const RunConfig& config, std::ostream& out) {
    const DistPtr dist = parse_distribution(config.dist_spec);
    json values = json::array();
    Rows rows;
    rows.header.push_back("cycle");
    for (int i = 1; i <= config.n; ++i) rows.header.push_back("x" + std::to_string(i));
    for (long rep = 0; rep < config.draws; ++rep) {
        const std::vector<double> cycle =
            sample_rss(dist, config.n, RngSpec{config.seed, static_cast<std::uint64_t>(rep)});
        values.push_back(cycle);
        std::vector<std::string> row{std::to_string(rep)};
        for (double x : cycle) row.push_back(fmt17(x));
        rows.data.push_back(std::move(row));
    }
    json doc{{"command", "sample"}, {"dist", dist->spec()},   {"n", config.n},
             {"draws", config.draws}, {"seed", config.seed}, {"values", values}};
    write_output(config, doc, rows, out);
    return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    std::vector<TheoremReport> reports;
    const std::string& suite = config.suite;

    auto dist = [&] { return parse_distribution(config.dist_spec); };
    auto weight = [&] { return parse_weight(config.weight_spec); };

    if (suite == "disp" || suite == "all") {
        const auto pairs = random_comparison_cases(config.pairs, config.seed);
        reports.push_back(verify_disp_comparison(pairs, config.n, config.tol));
    }
    if (suite == "transform-orders" || suite == "all") {
        const auto pairs = random_comparison_cases(config.pairs, config.seed + 1);
        for (StochasticOrder o : {StochasticOrder::convex_transform, StochasticOrder::star,
                                  StochasticOrder::superadditive})
            reports.push_back(verify_transform_order_comparison(pairs, o, config.n, config.tol));
    }
    if (suite == "delta" || suite == "all") {
        const auto pairs = random_comparison_cases(config.pairs, config.seed + 2);
        reports.push_back(verify_delta_criterion(pairs, config.n, 1024, config.tol));
    }
    if (suite == "orderstat") {
        reports.push_back(
            verify_orderstat_monotonicity(dist(), weight(), config.n, config.tol));
    } else if (suite == "all") {
        reports.push_back(verify_orderstat_monotonicity(
            make_neg_sqrt_exp(), WeightFunction::exponential(), 4, config.tol));
    }
    if (suite == "transformation") {
        const WeightFunction w = weight();
        if (w.kind() != WeightKind::power)
            throw InvalidParameter("transformation suite needs a pow:m weight");
        reports.push_back(
            verify_transformation(dist(), w.exponent(), config.c, config.n, config.tol));
    } else if (suite == "all") {
        reports.push_back(verify_transformation(make_exponential(1.0), 2.0, 2.0, 1, config.tol));
    }
    if (suite == "symmetry") {
        reports.push_back(
            verify_symmetry_characterization(dist(), weight(), config.odd_n, config.tol));
    } else if (suite == "all") {
        reports.push_back(verify_symmetry_characterization(
            make_uniform(-1.0, 1.0), WeightFunction::power(1.0), config.odd_n, config.tol));
    }
    if (suite == "elements") {
        reports.push_back(verify_rss_element_monotone(dist(), weight(), config.n, config.tol));
    } else if (suite == "all") {
        reports.push_back(verify_rss_element_monotone(make_exponential(1.0),
                                                      WeightFunction::unit(), 3, config.tol));
        reports.push_back(verify_rss_element_monotone(make_power(3.0), WeightFunction::unit(),
                                                      3, config.tol));
    }
    if (suite == "bound") {
        reports.push_back(verify_bound(dist(), weight(), config.n_list, config.tol));
    } else if (suite == "all") {
        reports.push_back(verify_bound(make_exponential(1.0), WeightFunction::power(1.0),
                                       config.n_list, config.tol));
    }

    if (reports.empty())
        throw ParseError("unknown verify suite '" + suite + "'", suite);

    bool all_pass = true;
    json jreports = json::array();
    Rows rows;
    rows.header = {"theorem_id", "cases_run", "cases_passed", "cases_skipped",
                   "worst_margin", "pass"};
    for (const TheoremReport& r : reports) {
        all_pass = all_pass && r.pass();
        jreports.push_back(report_json(r));
        rows.data.push_back({r.theorem_id, std::to_string(r.cases_run),
                             std::to_string(r.cases_passed), std::to_string(r.cases_skipped),
                             fmt17(r.worst_margin), r.pass() ? "true" : "false"});
    }
    json doc{{"command", "verify"}, {"suite", suite}, {"reports", jreports},
             {"pass", all_pass}};
    write_output(config, doc, rows, out);
    return all_pass ? 0 : 3;
}

int run_table(const RunConfig& config, std::ostream& out) {
    struct Case {
        std::string dist_spec;
        DistPtr dist;
        double param;
        double m;
        int n;
    };
    std::vector<Case> grid;
    if (config.family == "power") {
        for (double theta : config.thetas)
            for (double m : config.ms)
                for (int n : config.ns)
                    grid.push_back({"power:", make_power(theta), theta, m, n});
    } else if (config.family == "exp") {
        for (double lambda : config.lambdas)
            for (double m : config.ms)
                for (int n : config.ns)
                    grid.push_back({"exp:", make_exponential(lambda), lambda, m, n});
    } else if (config.family == "pareto") {
        for (double alpha : config.alphas)
            for (double m : config.ms)
                for (int n : config.ns)
                    grid.push_back({"pareto:", make_pareto(alpha), alpha, m, n});
    } else {
        throw ParseError("table family must be power, exp or pareto, got '" + config.family +
                             "'",
                         config.family);
    }
    if (grid.empty()) throw InvalidParameter("table sweep is empty");

    json jrows = json::array();
    Rows rows;
    rows.header = {"dist", "weight", "n", "value_quad", "value_closed", "value_mc",
                   "mc_std_error", "max_discrepancy", "reason"};
    for (const Case& c : grid) {
        const WeightFunction w =
            c.m == 0.0 ? WeightFunction::unit() : WeightFunction::power(c.m);
        json jrow{{"dist", c.dist->spec()}, {"weight", w.spec()}, {"n", c.n}};
        std::vector<std::string> row{c.dist->spec(), w.spec(), std::to_string(c.n)};
        try {
            const double quad = rss_extropy(c.dist, w, c.n, config.tol).value;
            const double closed = closed_rss(c.dist, w, c.n).value;
            const McEstimate mc =
                mc_rss_extropy(c.dist, w, c.n, config.draws, RngSpec{config.seed, 0});
            // Discrepancy compares the deterministic routes; the MC column
            // carries its own standard error.
            const double disc = std::abs(quad - closed);
            jrow["value"] = quad;
            jrow["value_closed"] = closed;
            jrow["value_mc"] = mc.value;
            jrow["mc_std_error"] = mc.std_error;
            jrow["max_discrepancy"] = disc;
            row.insert(row.end(), {fmt17(quad), fmt17(closed), fmt17(mc.value),
                                   fmt17(mc.std_error), fmt17(disc), ""});
        } catch (const ConvergenceError& e) {
            jrow["value"] = nullptr;
            jrow["reason"] = e.what();
            row.insert(row.end(), {"", "", "", "", "", e.what()});
        }
        jrows.push_back(jrow);
        rows.data.push_back(std::move(row));
    }
    json doc{{"command", "table"}, {"family", config.family}, {"rows", jrows}};
    write_output(config, doc, rows, out);
    return 0;
}

void apply_config_file(const std::string& path, RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'", path);
    json j;
    in >> j;
    if (j.contains("dist")) config.dist_spec = j["dist"].get<std::string>();
    if (j.contains("dist2")) config.dist2_spec = j["dist2"].get<std::string>();
    if (j.contains("weight")) config.weight_spec = j["weight"].get<std::string>();
    if (j.contains("weight2")) config.weight2_spec = j["weight2"].get<std::string>();
    if (j.contains("n")) config.n = j["n"].get<int>();
    if (j.contains("tol")) config.tol = j["tol"].get<double>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("draws")) config.draws = j["draws"].get<long>();
    if (j.contains("suite")) config.suite = j["suite"].get<std::string>();
    if (j.contains("pairs")) config.pairs = j["pairs"].get<int>();
    if (j.contains("c")) config.c = j["c"].get<double>();
    if (j.contains("odd_n")) config.odd_n = j["odd_n"].get<std::vector<int>>();
    if (j.contains("n_list")) config.n_list = j["n_list"].get<std::vector<int>>();
    if (j.contains("family")) config.family = j["family"].get<std::string>();
    if (j.contains("theta")) config.thetas = j["theta"].get<std::vector<double>>();
    if (j.contains("lambda")) config.lambdas = j["lambda"].get<std::vector<double>>();
    if (j.contains("alpha")) config.alphas = j["alpha"].get<std::vector<double>>();
    if (j.contains("m")) config.ms = j["m"].get<std::vector<double>>();
    if (j.contains("ns")) config.ns = j["ns"].get<std::vector<int>>();
    if (j.contains("method")) {
        const std::string m = j["method"].get<std::string>();
        if (m == "quad") config.method = MethodChoice::quad;
        else if (m == "closed") config.method = MethodChoice::closed;
        else if (m == "mc") config.method = MethodChoice::mc;
        else throw ParseError("unknown method '" + m + "'", m);
    }
    if (j.contains("output")) {
        const std::string o = j["output"].get<std::string>();
        if (o == "json") config.output = OutputFormat::json;
        else if (o == "csv") config.output = OutputFormat::csv;
        else if (o == "tsv") config.output = OutputFormat::tsv;
        else throw ParseError("unknown output format '" + o + "'", o);
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::compute:
            case Command::rss:
            case Command::srs:
                return run_scalar_command(config, out);
            case Command::compare:
                return run_compare(config, out);
            case Command::sample:
                return run_sample(config, out);
            case Command::verify:
                return run_verify(config, out);
            case Command::table:
                return run_table(config, out);
        }
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string render_config(const RunConfig& config) {
    json j{{"command", command_string(config.command)},
           {"dist", config.dist_spec},
           {"weight", config.weight_spec},
           {"n", config.n},
           {"method", method_string(config.method)},
           {"tol", config.tol},
           {"seed", config.seed},
           {"output", output_string(config.output)}};
    return j.dump();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;

    // Apply --config before flag parsing so flags take precedence.
    for (int k = 1; k + 1 < argc; ++k) {
        if (std::string(argv[k]) == "--config") {
            try {
                apply_config_file(argv[k + 1], config);
            } catch (const ParseError& e) {
                err << "error: " << e.what() << "\n";
                return 1;
            } catch (const std::exception& e) {
                err << "error: config file: " << e.what() << "\n";
                return 1;
            }
        }
    }

    CLI::App app{"extropy, weighted extropy and RSS/SRS scheme calculator"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file mirroring the flags");

    std::map<std::string, Command> commands{
        {"compute", Command::compute}, {"rss", Command::rss},       {"srs", Command::srs},
        {"compare", Command::compare}, {"sample", Command::sample}, {"verify", Command::verify},
        {"table", Command::table}};

    std::string method = method_string(config.method);
    std::string output = output_string(config.output);
    for (auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file (applied before flags)");
        sub->add_option("--dist", config.dist_spec, "distribution spec, e.g. exp:1.0");
        sub->add_option("--dist2", config.dist2_spec, "second distribution (compare)");
        sub->add_option("--weight", config.weight_spec, "weight spec: unit | pow:m | exp");
        sub->add_option("--weight2", config.weight2_spec, "second weight (compare)");
        sub->add_option("--n", config.n, "scheme size n");
        sub->add_option("--tol", config.tol, "quadrature tolerance");
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--draws", config.draws, "monte carlo draws / sample cycles");
        sub->add_option("--method", method, "quad | closed | mc");
        sub->add_option("--output", output, "json | csv | tsv");
        sub->add_option("--suite", config.suite,
                        "verify suite: disp | transform-orders | delta | orderstat | "
                        "transformation | symmetry | elements | bound | all");
        sub->add_option("--odd-n", config.odd_n, "odd n list (symmetry)")->delimiter(',');
        sub->add_option("--n-list", config.n_list, "n list (bound)")->delimiter(',');
        sub->add_option("--pairs", config.pairs, "randomized pair count");
        sub->add_option("--c", config.c, "scale factor (transformation)");
        sub->add_option("--family", config.family, "table family: power | exp | pareto");
        sub->add_option("--theta", config.thetas, "table theta sweep")->delimiter(',');
        sub->add_option("--lambda", config.lambdas, "table lambda sweep")->delimiter(',');
        sub->add_option("--alpha", config.alphas, "table alpha sweep")->delimiter(',');
        sub->add_option("--m", config.ms, "table weight exponent sweep")->delimiter(',');
        sub->add_option("--ns", config.ns, "table n sweep")->delimiter(',');
        sub->callback([&config, cmd] { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (method == "quad") config.method = MethodChoice::quad;
    else if (method == "closed") config.method = MethodChoice::closed;
    else if (method == "mc") config.method = MethodChoice::mc;
    else {
        err << "error: unknown method '" << method << "'\n";
        return 1;
    }
    if (output == "json") config.output = OutputFormat::json;
    else if (output == "csv") config.output = OutputFormat::csv;
    else if (output == "tsv") config.output = OutputFormat::tsv;
    else {
        err << "error: unknown output format '" << output << "'\n";
        return 1;
    }

    return run(config, out, err);
}

}  // namespace xtropy
