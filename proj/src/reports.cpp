#include "npls/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <json.hpp>

#include "npls/analytic.hpp"
#include "npls/entropy.hpp"
#include "npls/errors.hpp"
#include "npls/network.hpp"

namespace npls {

namespace {

using ordered_json = nlohmann::ordered_json;

const cplx kI(0.0, 1.0);

// Rounding through the 12-digit form keeps dumped JSON at report precision.
double report_round(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return std::strtod(buffer, nullptr);
}

ordered_json entropy_json(const EntropyValue& s) {
  ordered_json out;
  out["finite"] = s.finite;
  if (s.finite) {
    out["value"] = report_round(s.value);
  } else {
    out["value"] = "inf";
  }
  return out;
}

LSystem coupling_over(const std::vector<cplx>& nodes) {
  LSystem sys = build_multiplication(nodes.at(0));
  for (std::size_t k = 1; k < nodes.size(); ++k)
    sys = couple(sys, build_multiplication(nodes[k]));
  return sys;
}

struct CheckResult {
  const char* name;
  double max_deviation;
  double tolerance;
};

ordered_json check_json(const CheckResult& check, bool& all_passed) {
  const bool passed = check.max_deviation <= check.tolerance;
  all_passed = all_passed && passed;
  ordered_json out;
  out["name"] = check.name;
  out["max_deviation"] = report_round(check.max_deviation);
  out["tolerance"] = check.tolerance;
  out["passed"] = passed;
  return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(a);
    return out;
  }
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
  return out;
}

} // namespace

std::string format_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string analyze_report(const InterpolationData& data, double tol_pos,
                           double tol_node) {
  const PickPair pq = build_pick_matrices(data);
  const PositivityReport positivity = check_positivity(pq.P, tol_pos);
  if (!positivity.strictly_positive)
    raise(ErrorCode::PickNotPositive,
          "min eigenvalue " + std::to_string(positivity.min_eigenvalue));

  const LSystem pick = build_pick_form(data, tol_pos);
  // The node-formula routes run over the points whose Blaschke product is the
  // realized transfer function (the data nodes themselves when all values are
  // i), so the displayed routes describe one and the same system.
  const std::vector<cplx> nodes = blaschke_nodes(pick);
  const EntropyValue s_system = entropy_from_system(pick, tol_node);
  const EntropyValue s_nodes = entropy_from_nodes(nodes, tol_node);
  const DissipationValue d_entropy = dissipation_from_entropy(s_system);
  const DissipationValue d_nodes = dissipation_from_nodes(nodes, tol_node);
  const DissipationValue d_operator = dissipation_operator(pick);
  const RegimeClassification regime = classify_regime(data.nodes, tol_node);

  ordered_json report;
  report["pick"] = {
      {"min_eigenvalue", report_round(positivity.min_eigenvalue)},
      {"matrix_norm", report_round(positivity.matrix_norm)},
      {"strictly_positive", positivity.strictly_positive},
      {"condition_estimate", report_round(positivity.condition_estimate)},
  };
  report["entropy"] = entropy_json(s_system);
  report["entropy_routes"] = {
      {"from_system", entropy_json(s_system)},
      {"from_nodes", entropy_json(s_nodes)},
  };
  report["dissipation"] = report_round(d_entropy);
  report["dissipation_routes"] = {
      {"from_entropy", report_round(d_entropy)},
      {"from_nodes", report_round(d_nodes)},
      {"operator", report_round(d_operator)},
  };
  report["regime"] = regime_name(regime.kind);
  report["offending_nodes"] = regime.offending_nodes;
  try {
    report["kappa"] = report_round(compute_kappa(pick));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    report["kappa"] = nullptr;
  }
  return report.dump();
}

VerifyOutcome verify_report(const InterpolationData& data, double tol_pos) {
  const LSystem pick = build_pick_form(data, tol_pos);
  const std::vector<cplx> nodes = blaschke_nodes(pick);
  const LSystem model = build_model_delta(nodes);
  const LSystem coupling = coupling_over(nodes);
  const std::vector<cplx> grid = verification_grid(pick, model);

  CheckResult transfer_check{"transfer_agreement", 0.0, 1e-10};
  CheckResult cayley_check{"cayley_duality", 0.0, 1e-11};
  CheckResult mult_check{"multiplication_theorem", 0.0, 1e-11};
  for (const cplx& z : grid) {
    const cplx w_pick = transfer(pick, z);
    const cplx w_model = transfer(model, z);
    const cplx w_coupling = transfer(coupling, z);
    transfer_check.max_deviation =
        std::max({transfer_check.max_deviation, std::abs(w_pick - w_model),
                  std::abs(w_pick - w_coupling), std::abs(w_model - w_coupling)});
    for (const LSystem* sys : {&pick, &model, &coupling}) {
      const cplx dual = cayley_v_to_w(impedance(*sys, z));
      cayley_check.max_deviation = std::max(
          cayley_check.max_deviation, std::abs(dual - transfer(*sys, z)));
    }
    cplx product = 1.0;
    for (const cplx& node : nodes)
      product *= transfer(build_multiplication(node), z);
    mult_check.max_deviation =
        std::max(mult_check.max_deviation, std::abs(w_coupling - product));
  }

  CheckResult route_check{"invariant_route_agreement", 0.0, 1e-9};
  const EntropyValue s_system = entropy_from_system(pick);
  const EntropyValue s_nodes = entropy_from_nodes(nodes);
  if (s_system.finite != s_nodes.finite) {
    route_check.max_deviation = std::numeric_limits<double>::max();
  } else if (s_system.finite) {
    route_check.max_deviation = std::abs(s_system.value - s_nodes.value);
  }
  const DissipationValue d_operator = dissipation_operator(pick);
  const DissipationValue d_entropy = dissipation_from_entropy(s_system);
  const DissipationValue d_nodes = dissipation_from_nodes(nodes);
  route_check.max_deviation = std::max(
      {route_check.max_deviation, std::abs(d_operator - d_entropy),
       std::abs(d_operator - d_nodes), std::abs(d_entropy - d_nodes)});

  CheckResult interp_check{"interpolation", 0.0, 1e-9};
  for (std::size_t k = 0; k < data.nodes.size(); ++k) {
    for (const LSystem* sys : {&pick, &model, &coupling}) {
      const cplx v = impedance(*sys, data.nodes[k]);
      interp_check.max_deviation =
          std::max(interp_check.max_deviation, std::abs(v - data.values[k]));
    }
  }

  bool all_passed = true;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& check :
       {transfer_check, cayley_check, route_check, interp_check, mult_check})
    checks.push_back(check_json(check, all_passed));

  ordered_json report;
  report["checks"] = checks;
  report["all_passed"] = all_passed;

  VerifyOutcome outcome;
  outcome.json = report.dump();
  outcome.all_passed = all_passed;
  return outcome;
}

std::string regimes_report(const InterpolationData& data, double tol_node) {
  const RegimeClassification regime = classify_regime(data.nodes, tol_node);
  ordered_json report;
  report["regime"] = regime_name(regime.kind);
  report["offending_nodes"] = regime.offending_nodes;
  return report.dump();
}

std::string eval_csv(const LSystem& sys, char func, const EvalGrid& grid) {
  std::string out = "z_re,z_im,f_re,f_im\n";
  for (double im : linspace(grid.im0, grid.im1, grid.steps)) {
    for (double re : linspace(grid.re0, grid.re1, grid.steps)) {
      const cplx z(re, im);
      const cplx f = (func == 'W') ? transfer(sys, z) : impedance(sys, z);
      out += format_number(re) + "," + format_number(im) + "," +
             format_number(f.real()) + "," + format_number(f.imag()) + "\n";
    }
  }
  return out;
}

std::string bode_csv(const InterpolationData& data) {
  const SymmetricConfig config = detect_symmetric(data.nodes);
  const LCNetwork net = synthesize_lc(model_impedance(config));
  std::string out = "omega,z_re,z_im\n";
  const std::size_t samples = 200;
  for (std::size_t k = 0; k < samples; ++k) {
    const double omega =
        std::pow(10.0, -2.0 + 4.0 * static_cast<double>(k) /
                               static_cast<double>(samples - 1));
    const cplx z = network_impedance(net, cplx(1e-3, omega));
    out += format_number(omega) + "," + format_number(z.real()) + "," +
           format_number(z.imag()) + "\n";
  }
  return out;
}

std::string synth_netlist(const InterpolationData& data) {
  const SymmetricConfig config = detect_symmetric(data.nodes);
  return emit_netlist(synthesize_lc(model_impedance(config)));
}

} // namespace npls
