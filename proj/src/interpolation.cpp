#include "npls/interpolation.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "npls/errors.hpp"

namespace npls {

InterpolationData validate_data(const std::vector<cplx>& nodes,
                                const std::optional<std::vector<cplx>>& values) {
  if (nodes.empty()) raise(ErrorCode::EmptyData, "at least one node required");
  if (nodes.size() > static_cast<std::size_t>(kMaxNodes))
    raise(ErrorCode::DataTooLarge,
          "at most " + std::to_string(kMaxNodes) + " nodes supported");
  if (values && values->size() != nodes.size())
    raise(ErrorCode::LengthMismatch,
          std::to_string(values->size()) + " values for " +
              std::to_string(nodes.size()) + " nodes");

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!(nodes[k].imag() > 0.0))
      raise_indexed(ErrorCode::NodeNotInUpperHalfPlane, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(nodes[j] - nodes[k]) < kTolDuplicate * (1.0 + std::abs(nodes[j])))
        raise_indexed(ErrorCode::DuplicateNodes, j + 1,
                      "coincides with node " + std::to_string(k + 1));
    }
  }

  InterpolationData data;
  data.nodes = nodes;
  if (values) {
    for (std::size_t k = 0; k < values->size(); ++k) {
      if (!((*values)[k].imag() > 0.0))
        raise_indexed(ErrorCode::ValueNotInUpperHalfPlane, k + 1);
    }
    data.values = *values;
  } else {
    data.values.assign(nodes.size(), cplx(0.0, 1.0));
    data.values_defaulted = true;
  }
  return data;
}

bool all_values_i(const InterpolationData& data, double tol) {
  for (const cplx& v : data.values)
    if (std::abs(v - cplx(0.0, 1.0)) >= tol) return false;
  return true;
}

PickPair build_pick_matrices(const InterpolationData& data) {
  const auto m = static_cast<Eigen::Index>(data.nodes.size());
  PickPair pair;
  pair.P.resize(m, m);
  pair.Q.resize(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const cplx zj = data.nodes[static_cast<std::size_t>(j)];
    const cplx vj = data.values[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < m; ++k) {
      const cplx zk = data.nodes[static_cast<std::size_t>(k)];
      const cplx vk = data.values[static_cast<std::size_t>(k)];
      const cplx denom = zk - std::conj(zj);
      pair.P(j, k) = (vk - std::conj(vj)) / denom;
      pair.Q(j, k) = (zk * vk - std::conj(zj) * std::conj(vj)) / denom;
    }
  }
  // Entries are Hermitian up to rounding; fold the residue out so downstream
  // self-adjoint solvers see exact symmetry.
  pair.P = ((pair.P + pair.P.adjoint()) / 2.0).eval();
  pair.Q = ((pair.Q + pair.Q.adjoint()) / 2.0).eval();
  return pair;
}

PositivityReport check_positivity(const Eigen::MatrixXcd& P, double tol_pos) {
  const double scale = P.norm();
  const double asym = (P - P.adjoint()).norm();
  if (asym > 1e-10 * (scale > 0.0 ? scale : 1.0))
    raise(ErrorCode::NonHermitianInput,
          "asymmetry " + std::to_string(asym));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(P, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd eigs = solver.eigenvalues();

  PositivityReport report;
  report.min_eigenvalue = eigs.minCoeff();
  report.matrix_norm = eigs.cwiseAbs().maxCoeff();
  report.strictly_positive = report.min_eigenvalue > tol_pos * report.matrix_norm;
  const double min_abs = eigs.cwiseAbs().minCoeff();
  report.condition_estimate =
      min_abs > 0.0 ? report.matrix_norm / min_abs
                    : std::numeric_limits<double>::infinity();
  return report;
}

} // namespace npls
