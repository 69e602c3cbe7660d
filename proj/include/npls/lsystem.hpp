#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "npls/interpolation.hpp"
#include "npls/types.hpp"

namespace npls {

enum class SystemForm { PickForm, ModelDelta, Multiplication, Coupling };

const char* form_name(SystemForm form) noexcept;
std::optional<SystemForm> form_from_name(const std::string& name) noexcept;

// State-space system (T, g) with a rank-one output channel. When `metric` is
// present the state space carries the inner product <x,y> = y* metric x and
// the dissipativity identity reads (T - T#)/(2i) = g g# with T# the metric
// adjoint; otherwise the space is Euclidean and the identity is
// (T - T*)/(2i) = g g*.
struct LSystem {
  Eigen::MatrixXcd T;
  Eigen::VectorXcd g;
  std::optional<Eigen::MatrixXcd> metric;
  SystemForm form = SystemForm::PickForm;
  // Present exactly when the transfer function is known to equal the Blaschke
  // product over these points (model/multiplication/coupling always; the Pick
  // form only when every target value is i).
  std::optional<std::vector<cplx>> source_nodes;

  Eigen::Index dim() const { return T.rows(); }
  bool euclidean() const { return !metric.has_value(); }
};

// Ingredients of the Pick-form construction over the metric P: the channel
// seed phi (the negated conjugate of the value column, which coincides with
// the value column itself whenever every value is i), the channel
// g = P^{-1} phi, and the state part A = P^{-1} Q. Satisfies P g = phi and
// P A = A* P.
struct RealizationAux {
  Eigen::VectorXcd phi;
  Eigen::VectorXcd g;
  Eigen::MatrixXcd A;
};

// Throws PickNotPositive unless P is strictly positive at tol_pos.
RealizationAux build_realization_aux(const InterpolationData& data,
                                     double tol_pos = kTolPos);

// State operator T = A + i g (g* P) from the ingredients above; interpolates
// V(z_k) = v_k. Throws PickNotPositive unless P is strictly positive at
// tol_pos.
LSystem build_pick_form(const InterpolationData& data, double tol_pos = kTolPos);

// Upper-triangular model: diag z_k, entries 2i sqrt(Im z_k Im z_j) above the
// diagonal, channel sqrt(Im z_k); realizes the v = i problem for these nodes.
LSystem build_model_delta(const std::vector<cplx>& nodes);

// One-dimensional multiplication system at lambda0 (Im lambda0 > 0).
LSystem build_multiplication(cplx lambda0);

// Feedback coupling: block upper-triangular with off-diagonal 2i g1 g2*.
// Metric inputs are flattened through to_euclidean first. Transfer functions
// multiply under this operation.
LSystem couple(const LSystem& first, const LSystem& second);

// Congruence by the Cholesky factor of the metric; preserves the transfer
// function and drops the metric.
LSystem to_euclidean(const LSystem& sys);

// Euclidean-frame split T ~ re + i g g* with `re` exactly Hermitian and the
// skew part exactly rank one. Evaluators work from this split so that the
// computed operator keeps the dissipative structure to the last bit even
// when the stored metric is badly conditioned.
struct EuclideanPair {
  Eigen::MatrixXcd re;
  Eigen::VectorXcd g;
};
EuclideanPair euclidean_parts(const LSystem& sys);

// Verifies the (metric-aware) dissipativity identity to 1e-10 relative
// Frobenius error.
bool check_dissipativity(const LSystem& sys);

// Rank of [ (T - probe_j I)^{-1} g ]_j via SVD; minimal iff rank == dim.
// Default probes: -i * j * (1 + ||T||_F), j = 1..dim, all regular for a
// dissipative T. Throws ProbeNotRegular if a probe is within 1e-10 of an
// eigenvalue.
bool check_minimality(const LSystem& sys,
                      const std::vector<cplx>& probes = {});

// Max |W1 - W2| over the grid <= tol. Throws GridPointNotRegular when a grid
// point is inside the pole guard of either system.
bool check_unitary_equivalence(const LSystem& first, const LSystem& second,
                               const std::vector<cplx>& grid, double tol);

// Deterministic 25-point lower-half-plane grid clear of both spectra: five
// real offsets crossed with five depths at multiples of R = 1 + max
// |eigenvalue|. Transfer functions are contractions on it, so pointwise
// comparisons need no rescaling.
std::vector<cplx> verification_grid(const LSystem& first, const LSystem& second);

// Points whose Blaschke product equals the transfer function: the recorded
// source nodes when present, otherwise the eigenvalues of the Euclidean T.
// Sorted by real part, then imaginary part.
std::vector<cplx> blaschke_nodes(const LSystem& sys);

// Seeded generator: couples m random multiplication systems and samples its
// impedance at m random distinct nodes. The result always validates and has
// a strictly positive Pick matrix (resampled on the rare degenerate draw).
InterpolationData sample_valid_data(std::uint64_t seed, std::size_t m);

} // namespace npls
