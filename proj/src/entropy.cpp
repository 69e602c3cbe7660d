#include "npls/entropy.hpp"

#include <cmath>

#include <Eigen/LU>

#include "npls/analytic.hpp"
#include "npls/errors.hpp"

namespace npls {

namespace {

const cplx kI(0.0, 1.0);

bool node_at_i(cplx z, double tol) { return std::abs(z - kI) < tol; }

// ln of the single-node modulus ratio |(z+i)/(z-i)|^... split for reuse:
// s(x,y) = (1/2) ln[(x^2+(1+y)^2) / (x^2+(1-y)^2)].
double single_entropy(double x, double y) {
  return 0.5 * (std::log(x * x + (1.0 + y) * (1.0 + y)) -
                std::log(x * x + (1.0 - y) * (1.0 - y)));
}

} // namespace

const char* regime_name(RegimeKind kind) noexcept {
  switch (kind) {
    case RegimeKind::Infinite: return "infinite";
    case RegimeKind::MaximalFinite: return "maximal_finite";
    case RegimeKind::SubMaximal: return "sub_maximal";
  }
  return "unknown";
}

EntropyValue entropy_from_system(const LSystem& sys, double tol_node) {
  if (sys.source_nodes) {
    for (const cplx& node : *sys.source_nodes)
      if (node_at_i(node, tol_node)) return {false, 0.0};
  }
  const double modulus = std::abs(transfer(sys, -kI));
  if (modulus < 1e-300) return {false, 0.0};
  double value = -std::log(modulus);
  if (value < 0.0 && value > -1e-12) value = 0.0; // rounding at |W| = 1
  return {true, value};
}

EntropyValue entropy_from_nodes(const std::vector<cplx>& nodes, double tol_node) {
  double sum = 0.0;
  for (const cplx& node : nodes) {
    if (node_at_i(node, tol_node)) return {false, 0.0};
    sum += single_entropy(node.real(), node.imag());
  }
  return {true, sum};
}

SingleNodeInvariants single_node_invariants(cplx lambda0, double tol_node) {
  SingleNodeInvariants out;
  if (node_at_i(lambda0, tol_node)) {
    out.entropy = {false, 0.0};
    out.dissipation = 1.0;
    return out;
  }
  const double x = lambda0.real();
  const double y = lambda0.imag();
  out.entropy = {true, single_entropy(x, y)};
  out.dissipation = 4.0 * y / (x * x + (1.0 + y) * (1.0 + y));
  return out;
}

DissipationValue dissipation_from_entropy(const EntropyValue& s) {
  if (!s.finite) return 1.0;
  return -std::expm1(-2.0 * s.value);
}

DissipationValue dissipation_from_nodes(const std::vector<cplx>& nodes,
                                        double tol_node) {
  double log_complement = 0.0; // sum of ln[(x^2+(1-y)^2)/(x^2+(1+y)^2)]
  for (const cplx& node : nodes) {
    if (node_at_i(node, tol_node)) return 1.0;
    log_complement -= 2.0 * single_entropy(node.real(), node.imag());
  }
  return -std::expm1(log_complement);
}

DissipationValue dissipation_operator(const LSystem& sys) {
  // Structured Euclidean split keeps the shifted operator exactly
  // Hermitian plus rank one, so the norm is metric free.
  const EuclideanPair parts = euclidean_parts(sys);
  const auto n = parts.re.rows();
  const Eigen::MatrixXcd shifted =
      parts.re + kI * (parts.g * parts.g.adjoint()) +
      kI * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::VectorXcd x =
      Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).solve(parts.g);
  return 4.0 * x.squaredNorm();
}

EntropyValue compose_entropy(const EntropyValue& a, const EntropyValue& b) {
  if (!a.finite || !b.finite) return {false, 0.0};
  return {true, a.value + b.value};
}

DissipationValue compose_dissipation(DissipationValue d1, DissipationValue d2) {
  // A fully dissipative factor absorbs; keep that case exact.
  if (d1 == 1.0 || d2 == 1.0) return 1.0;
  return d1 + d2 - d1 * d2;
}

DissipationValue two_node_dissipation_closed(cplx lambda0, cplx mu0) {
  const double xl = lambda0.real(), yl = lambda0.imag();
  const double xm = mu0.real(), ym = mu0.imag();
  const double denom_l = xl * xl + (1.0 + yl) * (1.0 + yl);
  const double denom_m = xm * xm + (1.0 + ym) * (1.0 + ym);
  const double numer = 4.0 * yl * (std::norm(mu0) + 1.0) +
                       4.0 * ym * (std::norm(lambda0) + 1.0);
  return numer / (denom_l * denom_m);
}

RegimeClassification classify_regime(const std::vector<cplx>& nodes,
                                     double tol_node) {
  RegimeClassification out;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (node_at_i(nodes[k], tol_node)) out.offending_nodes.push_back(k + 1);
  if (!out.offending_nodes.empty()) {
    out.kind = RegimeKind::Infinite;
    return out;
  }
  bool all_imaginary = true;
  for (const cplx& node : nodes)
    if (std::abs(node.real()) >= tol_node) { all_imaginary = false; break; }
  out.kind = all_imaginary ? RegimeKind::MaximalFinite : RegimeKind::SubMaximal;
  return out;
}

ImaginaryAxisInvariants imaginary_axis_invariants(const std::vector<double>& a,
                                                  bool lenient, double tol_node) {
  ImaginaryAxisInvariants out;
  double sum = 0.0;
  double log_complement = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] > 0.0))
      raise_indexed(ErrorCode::NodeNotInUpperHalfPlane, k + 1);
    if (std::abs(a[k] - 1.0) < tol_node) {
      if (!lenient) raise_indexed(ErrorCode::NodeAtI, k + 1);
      out.entropy = {false, 0.0};
      out.dissipation = 1.0;
      return out;
    }
    const double step = std::log(std::abs((1.0 + a[k]) / (1.0 - a[k])));
    sum += step;
    log_complement -= 2.0 * step;
  }
  out.entropy = {true, sum};
  out.dissipation = -std::expm1(log_complement);
  return out;
}

double compute_kappa(const LSystem& sys) {
  const cplx vi = impedance(sys, kI);
  if (std::abs(vi.real()) >= 1e-9)
    raise(ErrorCode::NotApplicable, "V(i) is not purely imaginary");
  double t = vi.imag();
  if (t > 1.0 && t <= 1.0 + 1e-12) t = 1.0; // boundary rounding
  if (!(t > 0.0) || t > 1.0)
    raise(ErrorCode::NotApplicable, "Im V(i) outside (0, 1]");
  return (1.0 - t) / (1.0 + t);
}

} // namespace npls
