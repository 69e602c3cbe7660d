#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "npls/types.hpp"

namespace npls {

// Interpolation problem: nodes z_k and target values v_k, all in the open
// upper half-plane, nodes pairwise distinct.
struct InterpolationData {
  std::vector<cplx> nodes;
  std::vector<cplx> values;
  bool values_defaulted = false; // true when values were filled with i
};

struct PickPair {
  Eigen::MatrixXcd P; // Hermitian; strict positivity <=> solvable with margin
  Eigen::MatrixXcd Q; // Hermitian companion
};

struct PositivityReport {
  double min_eigenvalue = 0.0;
  double matrix_norm = 0.0; // spectral norm (largest |eigenvalue|)
  bool strictly_positive = false;
  double condition_estimate = 0.0; // max|eig| / min|eig|, inf when singular
};

// Validates nodes/values; absent values default to i (flagged in the result).
InterpolationData validate_data(const std::vector<cplx>& nodes,
                                const std::optional<std::vector<cplx>>& values = std::nullopt);

bool all_values_i(const InterpolationData& data, double tol = kTolNode);

// P_jk = (v_k - conj(v_j)) / (z_k - conj(z_j)),
// Q_jk = (z_k v_k - conj(z_j v_j)) / (z_k - conj(z_j)); both symmetrized.
PickPair build_pick_matrices(const InterpolationData& data);

// Self-adjoint eigenvalue check. strictly_positive <=> min eig > tol_pos * norm.
PositivityReport check_positivity(const Eigen::MatrixXcd& P, double tol_pos = kTolPos);

} // namespace npls
