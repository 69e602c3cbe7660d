#include "npls/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "npls/errors.hpp"

namespace npls {

namespace {

const cplx kI(0.0, 1.0);

double min_distance(const Eigen::VectorXcd& points, cplx z) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < points.size(); ++k)
    best = std::min(best, std::abs(points(k) - z));
  return best;
}

Eigen::VectorXcd eigenvalues_of(const Eigen::MatrixXcd& T) {
  if (T.rows() == 1) return T.diagonal();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T, false);
  return solver.eigenvalues();
}

Eigen::VectorXcd resolvent_apply(const Eigen::MatrixXcd& M, cplx z,
                                 const Eigen::VectorXcd& g) {
  const auto n = M.rows();
  const Eigen::MatrixXcd shifted = M - z * Eigen::MatrixXcd::Identity(n, n);
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).solve(g);
}

} // namespace

cplx transfer(const LSystem& sys, cplx z) {
  // Evaluated on the structured Euclidean split so the operator is exactly
  // Hermitian plus rank one even for an ill-conditioned stored metric.
  const EuclideanPair parts = euclidean_parts(sys);
  const Eigen::MatrixXcd T =
      parts.re + kI * (parts.g * parts.g.adjoint());
  if (min_distance(eigenvalues_of(T), z) <= kTolResolvent * (1.0 + std::abs(z)))
    raise(ErrorCode::NotRegularPoint, "z inside the spectral guard of T");
  const Eigen::VectorXcd x = resolvent_apply(T, z, parts.g);
  return 1.0 - 2.0 * kI * (parts.g.adjoint() * x).value();
}

cplx impedance(const LSystem& sys, cplx z) {
  const EuclideanPair parts = euclidean_parts(sys);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(parts.re,
                                                         Eigen::EigenvaluesOnly);
  const Eigen::VectorXcd spectrum = solver.eigenvalues().cast<cplx>();
  if (min_distance(spectrum, z) <= kTolResolvent * (1.0 + std::abs(z)))
    raise(ErrorCode::NotRegularPoint, "z inside the spectral guard of Re T");
  const Eigen::VectorXcd x = resolvent_apply(parts.re, z, parts.g);
  return (parts.g.adjoint() * x).value();
}

cplx cayley_w_to_v(cplx w) {
  if (std::abs(w + 1.0) < 1e-300)
    raise(ErrorCode::PoleAtMinusOne, "transform has a pole at w = -1");
  return kI * (w - 1.0) / (w + 1.0);
}

cplx cayley_v_to_w(cplx v) {
  const cplx denom = 1.0 + kI * v;
  if (std::abs(denom) < 1e-300)
    raise(ErrorCode::PoleAtI, "transform has a pole at v = i");
  return (1.0 - kI * v) / denom;
}

cplx blaschke_transfer(const std::vector<cplx>& nodes, cplx z) {
  cplx product = 1.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (std::abs(z - nodes[k]) <= kTolResolvent * (1.0 + std::abs(z)))
      raise_indexed(ErrorCode::PoleAtNode, k + 1);
    product *= (z - std::conj(nodes[k])) / (z - nodes[k]);
  }
  return product;
}

cplx impedance_closed_form(const std::vector<cplx>& nodes, cplx z) {
  cplx upper = 1.0; // prod (z - conj z_k)
  cplx lower = 1.0; // prod (z - z_k)
  for (const cplx& node : nodes) {
    upper *= z - std::conj(node);
    lower *= z - node;
  }
  const cplx denom = upper + lower;
  if (std::abs(denom) <= 1e-14 * (std::abs(upper) + std::abs(lower)))
    raise(ErrorCode::DenominatorZero, "real pole of the impedance");
  return kI * (upper - lower) / denom;
}

cplx coupled_impedance_two(cplx lambda0, cplx mu0, cplx z) {
  const cplx sum = lambda0 + mu0;
  const cplx prod = lambda0 * mu0;
  const cplx denom = sum.real() * z - prod.real() - z * z;
  if (std::abs(denom) < 1e-300)
    raise(ErrorCode::DenominatorZero, "pole of the coupled impedance");
  return (sum.imag() * z - prod.imag()) / denom;
}

std::vector<cplx> default_herglotz_grid() {
  std::vector<cplx> grid;
  grid.reserve(100);
  for (int row = 0; row < 10; ++row) {
    const double im = 0.1 + (5.0 - 0.1) * row / 9.0;
    for (int col = 0; col < 10; ++col) {
      const double re = -5.0 + 10.0 * col / 9.0;
      grid.emplace_back(re, im);
    }
  }
  return grid;
}

HerglotzReport herglotz_scan(const std::function<cplx(cplx)>& evaluator,
                             const std::vector<cplx>& grid) {
  HerglotzReport report;
  report.min_imag = std::numeric_limits<double>::infinity();
  for (const cplx& z : grid) {
    cplx value;
    try {
      value = evaluator(z);
    } catch (const Error&) {
      ++report.skipped;
      continue;
    }
    ++report.evaluated;
    report.min_imag = std::min(report.min_imag, value.imag());
  }
  if (report.evaluated == 0) report.min_imag = 0.0;
  report.all_positive = report.evaluated > 0 && report.min_imag > 0.0;
  return report;
}

} // namespace npls
