#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgl/config.hpp"
#include "pgl/discounting.hpp"
#include "pgl/errors.hpp"
#include "pgl/policy_game.hpp"
#include "pgl/repeated_game.hpp"
#include "pgl/serialize.hpp"
#include "pgl/sweep.hpp"
#include "pgl/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equilibria and simulations of the reputational inflation-policy "
            "game under present-biased discounting";

  py::register_exception<pgl::ValidationError>(m, "ValidationError",
                                               PyExc_ValueError);
  py::register_exception<pgl::NumericalError>(m, "NumericalError",
                                              PyExc_ArithmeticError);
  py::register_exception<pgl::IoError>(m, "IoError", PyExc_OSError);

  py::enum_<pgl::DiscountKind>(m, "DiscountKind")
      .value("EXPONENTIAL", pgl::DiscountKind::Exponential)
      .value("QUASI_HYPERBOLIC", pgl::DiscountKind::QuasiHyperbolic)
      .value("GENERALIZED_HYPERBOLIC", pgl::DiscountKind::GeneralizedHyperbolic);

  py::class_<pgl::DiscountSpec>(m, "DiscountSpec")
      .def_static("exponential", &pgl::DiscountSpec::exponential, py::arg("r"))
      .def_static("exponential_from_factor",
                  &pgl::DiscountSpec::exponential_from_factor, py::arg("q"))
      .def_static("quasi_hyperbolic", &pgl::DiscountSpec::quasi_hyperbolic,
                  py::arg("beta"), py::arg("delta"))
      .def_static("generalized_hyperbolic",
                  &pgl::DiscountSpec::generalized_hyperbolic, py::arg("k"))
      .def_property_readonly("kind", &pgl::DiscountSpec::kind)
      .def("describe", &pgl::DiscountSpec::describe)
      .def("__repr__", &pgl::DiscountSpec::describe);

  m.def(
      "eval_discount",
      [](const pgl::DiscountSpec& spec, long long t) {
        return pgl::eval_discount(spec, t);
      },
      py::arg("spec"), py::arg("t"));
  m.def(
      "present_value",
      [](const std::vector<double>& payoffs, const pgl::DiscountSpec& spec) {
        return pgl::present_value(pgl::PayoffStream(payoffs), spec);
      },
      py::arg("payoffs"), py::arg("spec"));

  py::enum_<pgl::ShockKind>(m, "ShockKind")
      .value("NONE", pgl::ShockKind::None)
      .value("UNIFORM", pgl::ShockKind::Uniform)
      .value("LOGISTIC_CLIPPED_POSITIVE", pgl::ShockKind::LogisticClippedPositive);

  py::class_<pgl::ShockSpec>(m, "ShockSpec")
      .def_static("none", &pgl::ShockSpec::none)
      .def_static("uniform", &pgl::ShockSpec::uniform, py::arg("lo"),
                  py::arg("hi"), py::arg("seed"))
      .def_static("logistic_clipped_positive",
                  &pgl::ShockSpec::logistic_clipped_positive, py::arg("mean"),
                  py::arg("scale"), py::arg("seed"))
      .def_readonly("kind", &pgl::ShockSpec::kind)
      .def("analytic_mean", &pgl::ShockSpec::analytic_mean);

  py::class_<pgl::GameParams>(m, "GameParams")
      .def(py::init<double, double, int, std::optional<pgl::ShockSpec>>(),
           py::arg("a") = 1.0, py::arg("b_bar") = 1.0,
           py::arg("punishment_periods") = 1,
           py::arg("shock") = std::nullopt)
      .def_readonly("a", &pgl::GameParams::a)
      .def_readonly("b_bar", &pgl::GameParams::b_bar)
      .def_readonly("punishment_periods", &pgl::GameParams::punishment_periods)
      .def("pi_discretion", &pgl::GameParams::pi_discretion);

  py::enum_<pgl::ReportMode>(m, "ReportMode")
      .value("BASELINE", pgl::ReportMode::Baseline)
      .value("BEHAVIORAL", pgl::ReportMode::Behavioral);

  py::class_<pgl::EquilibriumReport>(m, "EquilibriumReport")
      .def_readonly("mode", &pgl::EquilibriumReport::mode)
      .def_readonly("a", &pgl::EquilibriumReport::a)
      .def_readonly("b_bar", &pgl::EquilibriumReport::b_bar)
      .def_readonly("discount_factor", &pgl::EquilibriumReport::discount_factor)
      .def_readonly("pi_discretion", &pgl::EquilibriumReport::pi_discretion)
      .def_readonly("pi_ideal", &pgl::EquilibriumReport::pi_ideal)
      .def_readonly("pi_best_enforceable",
                    &pgl::EquilibriumReport::pi_best_enforceable)
      .def_readonly("range_lo", &pgl::EquilibriumReport::range_lo)
      .def_readonly("range_hi", &pgl::EquilibriumReport::range_hi)
      .def_readonly("range_width", &pgl::EquilibriumReport::range_width)
      .def("to_json", [](const pgl::EquilibriumReport& r) { return pgl::to_json(r); })
      .def("__repr__",
           [](const pgl::EquilibriumReport& r) { return pgl::to_json(r); });

  m.def("loss", &pgl::loss, py::arg("pi"), py::arg("pi_e"), py::arg("params"),
        py::arg("b_t"));
  m.def("best_cheat", &pgl::best_cheat, py::arg("params"));
  m.def("temptation", &pgl::temptation, py::arg("target"), py::arg("params"));
  m.def("enforcement_differential", &pgl::enforcement_differential,
        py::arg("target"), py::arg("params"));
  m.def(
      "enforcement",
      [](double target, const pgl::GameParams& params, double df) {
        return pgl::enforcement(target, params, df);
      },
      py::arg("target"), py::arg("params"), py::arg("discount_factor"));
  m.def(
      "enforcement_under",
      [](double target, const pgl::GameParams& params,
         const pgl::DiscountSpec& spec) {
        return pgl::enforcement(target, params, spec);
      },
      py::arg("target"), py::arg("params"), py::arg("spec"));
  m.def("discretionary_equilibrium", &pgl::discretionary_equilibrium,
        py::arg("params"));
  m.def("best_enforceable_rule", &pgl::best_enforceable_rule, py::arg("params"),
        py::arg("discount_factor"));
  m.def("equilibrium_report", &pgl::equilibrium_report, py::arg("params"),
        py::arg("spec"));

  py::enum_<pgl::PolicymakerType>(m, "PolicymakerType")
      .value("NAIVE", pgl::PolicymakerType::Naive)
      .value("PARTIALLY_NAIVE", pgl::PolicymakerType::PartiallyNaive)
      .value("SOPHISTICATED", pgl::PolicymakerType::Sophisticated)
      .value("RESOLUTE", pgl::PolicymakerType::Resolute)
      .value("MYOPIC", pgl::PolicymakerType::Myopic);

  py::class_<pgl::PolicymakerProfile>(m, "PolicymakerProfile")
      .def(py::init<double, double, double, bool, double>(),
           py::arg("beta") = 1.0, py::arg("beta_hat") = 1.0,
           py::arg("delta") = 0.9, py::arg("committed") = false,
           py::arg("sanction") = 0.0)
      .def_readonly("beta", &pgl::PolicymakerProfile::beta)
      .def_readonly("beta_hat", &pgl::PolicymakerProfile::beta_hat)
      .def_readonly("delta", &pgl::PolicymakerProfile::delta)
      .def_readonly("committed", &pgl::PolicymakerProfile::committed)
      .def_readonly("sanction", &pgl::PolicymakerProfile::sanction);

  m.def("classify", &pgl::classify, py::arg("profile"));

  py::enum_<pgl::Action>(m, "Action")
      .value("COMPLY", pgl::Action::Comply)
      .value("CHEAT", pgl::Action::Cheat)
      .value("PUNISHED", pgl::Action::Punished)
      .value("ABSTAIN", pgl::Action::Abstain);

  py::enum_<pgl::DiscountBasis>(m, "DiscountBasis")
      .value("ACTUAL_BETA", pgl::DiscountBasis::ActualBeta)
      .value("BELIEVED_BETA", pgl::DiscountBasis::BelievedBeta);

  py::class_<pgl::Decision>(m, "Decision")
      .def_readonly("action", &pgl::Decision::action)
      .def_readonly("margin", &pgl::Decision::margin);

  m.def("decide", &pgl::decide, py::arg("profile"), py::arg("params"),
        py::arg("target"), py::arg("basis"));
  m.def("detect_reversal", &pgl::detect_reversal, py::arg("profile"),
        py::arg("params"), py::arg("target"));

  py::class_<pgl::PeriodRecord>(m, "PeriodRecord")
      .def_readonly("t", &pgl::PeriodRecord::t)
      .def_readonly("announced_target", &pgl::PeriodRecord::announced_target)
      .def_readonly("expected_inflation", &pgl::PeriodRecord::expected_inflation)
      .def_readonly("realized_inflation", &pgl::PeriodRecord::realized_inflation)
      .def_readonly("period_loss", &pgl::PeriodRecord::period_loss)
      .def_readonly("action", &pgl::PeriodRecord::action)
      .def_readonly("planned_action", &pgl::PeriodRecord::planned_action)
      .def_readonly("reversal", &pgl::PeriodRecord::reversal);

  py::class_<pgl::TrajectorySummary>(m, "TrajectorySummary")
      .def_readonly("total_discounted_loss_actual_beta",
                    &pgl::TrajectorySummary::total_discounted_loss_actual_beta)
      .def_readonly("total_discounted_loss_spec",
                    &pgl::TrajectorySummary::total_discounted_loss_spec)
      .def_readonly("cheat_count", &pgl::TrajectorySummary::cheat_count)
      .def_readonly("reversal_count", &pgl::TrajectorySummary::reversal_count);

  py::class_<pgl::Trajectory>(m, "Trajectory")
      .def_readonly("periods", &pgl::Trajectory::periods)
      .def_readonly("summary", &pgl::Trajectory::summary)
      .def("to_csv", [](const pgl::Trajectory& t) { return pgl::trajectory_csv(t); });

  m.def("simulate", &pgl::simulate, py::arg("profile"), py::arg("params"),
        py::arg("spec"), py::arg("target"), py::arg("horizon"),
        py::arg("seed") = 42);
  m.def("one_shot_deviation_value", &pgl::one_shot_deviation_value,
        py::arg("params"), py::arg("spec"), py::arg("target"));

  py::class_<pgl::SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("a", &pgl::SweepSpec::a)
      .def_readwrite("b_bar", &pgl::SweepSpec::b_bar)
      .def_readwrite("beta_grid", &pgl::SweepSpec::beta_grid)
      .def_readwrite("delta_grid", &pgl::SweepSpec::delta_grid)
      .def_readwrite("q_grid", &pgl::SweepSpec::q_grid)
      .def_readwrite("output_path", &pgl::SweepSpec::output_path);

  py::class_<pgl::SweepRow>(m, "SweepRow")
      .def_readonly("beta", &pgl::SweepRow::beta)
      .def_readonly("delta", &pgl::SweepRow::delta)
      .def_readonly("discount_factor", &pgl::SweepRow::discount_factor)
      .def_readonly("pi_best_enforceable", &pgl::SweepRow::pi_best_enforceable)
      .def_readonly("range_width", &pgl::SweepRow::range_width)
      .def_readonly("width_ratio_vs_beta1", &pgl::SweepRow::width_ratio_vs_beta1);

  py::class_<pgl::NarrowingReport>(m, "NarrowingReport")
      .def_readonly("min_ratio", &pgl::NarrowingReport::min_ratio)
      .def_readonly("monotone", &pgl::NarrowingReport::monotone)
      .def_readonly("rows", &pgl::NarrowingReport::rows);

  m.def("run_sweep", &pgl::run_sweep, py::arg("spec"));
  m.def("sweep_csv", &pgl::sweep_csv, py::arg("rows"));
  m.def("narrowing_report", &pgl::narrowing_report, py::arg("spec"));

  py::class_<pgl::CheckResult>(m, "CheckResult")
      .def_readonly("name", &pgl::CheckResult::name)
      .def_readonly("passed", &pgl::CheckResult::passed)
      .def_readonly("failed", &pgl::CheckResult::failed)
      .def("ok", &pgl::CheckResult::ok);

  py::class_<pgl::VerifyReport>(m, "VerifyReport")
      .def_readonly("checks", &pgl::VerifyReport::checks)
      .def("all_passed", &pgl::VerifyReport::all_passed);

  m.def("run_verify", &pgl::run_verify, py::arg("trials") = 1000,
        py::arg("seed") = 42);
}
