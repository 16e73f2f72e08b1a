#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xtropy/closed_forms.hpp"
#include "xtropy/harness.hpp"
#include "xtropy/montecarlo.hpp"

namespace py = pybind11;
using namespace xtropy;

namespace {

StochasticOrder order_from_name(const std::string& name) {
    for (StochasticOrder o : {StochasticOrder::st, StochasticOrder::lr, StochasticOrder::hr,
                              StochasticOrder::disp, StochasticOrder::convex_transform,
                              StochasticOrder::star, StochasticOrder::superadditive,
                              StochasticOrder::irfr})
        if (order_name(o) == name) return o;
    throw InvalidParameter("unknown order '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_xtropy, m) {
    m.doc() = "extropy, weighted extropy and ranked-set-sampling scheme calculator";

    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

    py::class_<Support>(m, "Support")
        .def_readonly("lower", &Support::lower)
        .def_readonly("upper", &Support::upper);

    py::class_<Distribution, DistPtr>(m, "Distribution")
        .def("pdf", &Distribution::pdf)
        .def("cdf", &Distribution::cdf)
        .def("quantile", &Distribution::quantile)
        .def("reverse_hazard", &Distribution::reverse_hazard)
        .def("support", &Distribution::support)
        .def("spec", &Distribution::spec)
        .def("__repr__",
             [](const Distribution& d) { return "<Distribution " + d.spec() + ">"; });

    m.def("distribution", &parse_distribution, py::arg("spec"),
          "Parse a distribution spec string, e.g. 'exp:1.0' or 'uniform:0,1'.");
    m.def("uniform", &make_uniform);
    m.def("power", &make_power);
    m.def("exponential", &make_exponential);
    m.def("pareto", &make_pareto);
    m.def("beta_kernel", &make_beta_kernel);
    m.def("linear_rising", &make_linear_rising);
    m.def("linear_falling", &make_linear_falling);
    m.def("neg_sqrt_exp", &make_neg_sqrt_exp);
    m.def("triangular", &make_triangular);
    m.def("scaled", &make_scaled);
    m.def("shifted", &make_shifted);
    m.def("custom", &make_custom, py::arg("u"), py::arg("x"));

    py::class_<WeightFunction>(m, "WeightFunction")
        .def("__call__", &WeightFunction::operator())
        .def("spec", &WeightFunction::spec)
        .def("__repr__",
             [](const WeightFunction& w) { return "<WeightFunction " + w.spec() + ">"; });
    m.def("weight", &parse_weight, py::arg("spec"), "Parse 'unit', 'pow:m' or 'exp'.");
    m.def("unit_weight", &WeightFunction::unit);
    m.def("power_weight", &WeightFunction::power);
    m.def("exp_weight", &WeightFunction::exponential);

    py::class_<ExtropyValue>(m, "ExtropyValue")
        .def_readonly("value", &ExtropyValue::value)
        .def_readonly("error_estimate", &ExtropyValue::error_estimate)
        .def_readonly("note", &ExtropyValue::note)
        .def_property_readonly("method",
                               [](const ExtropyValue& v) { return method_name(v.method); })
        .def("__repr__", [](const ExtropyValue& v) {
            return "<ExtropyValue " + std::to_string(v.value) + ">";
        });

    m.def("general_weighted_extropy", &general_weighted_extropy, py::arg("dist"),
          py::arg("weight"), py::arg("tol") = 1e-10);
    m.def("order_statistic_extropy", &order_statistic_extropy, py::arg("dist"),
          py::arg("weight"), py::arg("i"), py::arg("n"), py::arg("tol") = 1e-10);
    m.def(
        "lambda_profile",
        [](DistPtr dist, const WeightFunction& w, double u) {
            return LambdaProfile(std::move(dist), w)(u);
        },
        py::arg("dist"), py::arg("weight"), py::arg("u"));

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def_readonly("valid", &Rational::valid);
    py::class_<RssCoefficients>(m, "RssCoefficients")
        .def_readonly("n", &RssCoefficients::n)
        .def_readonly("c", &RssCoefficients::c)
        .def_readonly("q_n", &RssCoefficients::q_n)
        .def_readonly("c_exact", &RssCoefficients::c_exact)
        .def_readonly("q_exact", &RssCoefficients::q_exact);
    m.def("rss_coefficients", &rss_coefficients, py::arg("n"));
    m.def("srs_extropy", &srs_extropy, py::arg("dist"), py::arg("weight"), py::arg("n"),
          py::arg("tol") = 1e-10);
    m.def("rss_extropy", &rss_extropy, py::arg("dist"), py::arg("weight"), py::arg("n"),
          py::arg("tol") = 1e-10);
    m.def("rss_srs_ratio_bound", &rss_srs_ratio_bound, py::arg("n"));

    py::class_<ClosedFormReport>(m, "ClosedFormReport")
        .def_readonly("value", &ClosedFormReport::value)
        .def_readonly("correction_applied", &ClosedFormReport::correction_applied);
    m.def("power_rss_closed", &power_rss_closed, py::arg("theta"), py::arg("m"), py::arg("n"));
    m.def("exponential_rss_closed", &exponential_rss_closed, py::arg("lam"), py::arg("m"),
          py::arg("n"));
    m.def("pareto_rss_closed", &pareto_rss_closed, py::arg("alpha"), py::arg("m"),
          py::arg("n"));
    m.def("exp_orderstat_moment", &exp_orderstat_moment, py::arg("i"), py::arg("n"),
          py::arg("m"));
    m.def("linear_pair_values", &linear_pair_values, py::arg("m"));

    py::class_<OrderVerdict>(m, "OrderVerdict")
        .def_readonly("holds", &OrderVerdict::holds)
        .def_readonly("worst_violation", &OrderVerdict::worst_violation)
        .def_readonly("worst_point", &OrderVerdict::worst_point)
        .def_property_readonly("order",
                               [](const OrderVerdict& v) { return order_name(v.order); });
    m.def(
        "check_order",
        [](const std::string& kind, DistPtr X, DistPtr Y, int grid) {
            return check_order(order_from_name(kind), X, Y, grid);
        },
        py::arg("kind"), py::arg("X"), py::arg("Y"), py::arg("grid_size") = 1024);
    m.def("check_irfr", &check_irfr, py::arg("X"), py::arg("grid_size") = 1024);
    m.def("check_quantile_density_domination", &check_quantile_density_domination,
          py::arg("X"), py::arg("Y"), py::arg("grid_size") = 1024);

    py::class_<DeltaPartition>(m, "DeltaPartition")
        .def_readonly("grid", &DeltaPartition::grid)
        .def_readonly("delta", &DeltaPartition::delta)
        .def_readonly("a1", &DeltaPartition::a1)
        .def_readonly("a2", &DeltaPartition::a2)
        .def_readonly("inf_phi_on_a1", &DeltaPartition::inf_phi_on_a1)
        .def_readonly("sup_phi_on_a2", &DeltaPartition::sup_phi_on_a2);
    py::class_<DeltaCriterionResult>(m, "DeltaCriterionResult")
        .def_readonly("partition", &DeltaCriterionResult::partition)
        .def_readonly("hypothesis_holds", &DeltaCriterionResult::hypothesis_holds)
        .def_readonly("conclusion_holds", &DeltaCriterionResult::conclusion_holds);
    m.def("delta_criterion", &delta_criterion, py::arg("X"), py::arg("Y"), py::arg("w1"),
          py::arg("w2"), py::arg("n"), py::arg("grid_size") = 1024, py::arg("tol") = 1e-10);

    py::class_<RngSpec>(m, "RngSpec")
        .def(py::init([](std::uint64_t seed, std::uint64_t stream) {
                 return RngSpec{seed, stream};
             }),
             py::arg("seed") = 0, py::arg("stream") = 0)
        .def_readwrite("seed", &RngSpec::seed)
        .def_readwrite("stream", &RngSpec::stream);
    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n_draws", &McEstimate::n_draws)
        .def_readonly("sign_indeterminate", &McEstimate::sign_indeterminate);
    m.def("sample_rss", &sample_rss, py::arg("dist"), py::arg("n"), py::arg("rng"));
    m.def("mc_general_weighted_extropy", &mc_general_weighted_extropy, py::arg("dist"),
          py::arg("weight"), py::arg("n_draws"), py::arg("rng"));
    m.def("mc_rss_extropy", &mc_rss_extropy, py::arg("dist"), py::arg("weight"), py::arg("n"),
          py::arg("n_draws"), py::arg("rng"));

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("theorem_id", &TheoremReport::theorem_id)
        .def_readonly("cases_run", &TheoremReport::cases_run)
        .def_readonly("cases_passed", &TheoremReport::cases_passed)
        .def_readonly("cases_skipped", &TheoremReport::cases_skipped)
        .def_readonly("applicable", &TheoremReport::applicable)
        .def_readonly("worst_margin", &TheoremReport::worst_margin)
        .def_readonly("witness", &TheoremReport::witness)
        .def("passed", &TheoremReport::pass)
        .def("__repr__", [](const TheoremReport& r) { return report_table(r); });

    py::class_<ComparisonCase>(m, "ComparisonCase")
        .def(py::init([](DistPtr X, DistPtr Y, WeightFunction w1, WeightFunction w2) {
                 return ComparisonCase{std::move(X), std::move(Y), std::move(w1), std::move(w2),
                                       ""};
             }),
             py::arg("X"), py::arg("Y"), py::arg("w1"), py::arg("w2"));
    m.def("random_comparison_cases", &random_comparison_cases, py::arg("count"),
          py::arg("seed"));
    m.def("verify_disp_comparison", &verify_disp_comparison, py::arg("pairs"), py::arg("n"),
          py::arg("tol") = 1e-10);
    m.def(
        "verify_transform_order_comparison",
        [](const std::vector<ComparisonCase>& pairs, const std::string& order, int n,
           double tol) {
            return verify_transform_order_comparison(pairs, order_from_name(order), n, tol);
        },
        py::arg("pairs"), py::arg("order"), py::arg("n"), py::arg("tol") = 1e-10);
    m.def("verify_delta_criterion", &verify_delta_criterion, py::arg("pairs"), py::arg("n"),
          py::arg("grid_size") = 1024, py::arg("tol") = 1e-10);
    m.def("verify_orderstat_monotonicity", &verify_orderstat_monotonicity, py::arg("dist"),
          py::arg("weight"), py::arg("n_max"), py::arg("tol") = 1e-10);
    m.def("verify_transformation", &verify_transformation, py::arg("dist"), py::arg("m"),
          py::arg("c"), py::arg("n"), py::arg("tol") = 1e-10);
    m.def("verify_symmetry_characterization", &verify_symmetry_characterization,
          py::arg("dist"), py::arg("weight"), py::arg("odd_n"), py::arg("tol") = 1e-10);
    m.def("verify_rss_element_monotone", &verify_rss_element_monotone, py::arg("dist"),
          py::arg("weight"), py::arg("n"), py::arg("tol") = 1e-10);
    m.def("verify_bound", &verify_bound, py::arg("dist"), py::arg("weight"), py::arg("n_list"),
          py::arg("tol") = 1e-10);

    m.attr("__version__") = "0.1.0";
}
