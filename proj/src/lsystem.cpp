#include "npls/lsystem.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "npls/analytic.hpp"
#include "npls/errors.hpp"

namespace npls {

namespace {

const cplx kI(0.0, 1.0);

Eigen::VectorXcd eigenvalues_of(const Eigen::MatrixXcd& T) {
  if (T.rows() == 1) return T.diagonal();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T, false);
  return solver.eigenvalues();
}

double min_eigen_distance(const Eigen::MatrixXcd& T, cplx z) {
  const Eigen::VectorXcd eigs = eigenvalues_of(T);
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < eigs.size(); ++k)
    best = std::min(best, std::abs(eigs(k) - z));
  return best;
}

} // namespace

const char* form_name(SystemForm form) noexcept {
  switch (form) {
    case SystemForm::PickForm: return "pick_form";
    case SystemForm::ModelDelta: return "model_delta";
    case SystemForm::Multiplication: return "multiplication";
    case SystemForm::Coupling: return "coupling";
  }
  return "unknown";
}

std::optional<SystemForm> form_from_name(const std::string& name) noexcept {
  if (name == "pick_form") return SystemForm::PickForm;
  if (name == "model_delta") return SystemForm::ModelDelta;
  if (name == "multiplication") return SystemForm::Multiplication;
  if (name == "coupling") return SystemForm::Coupling;
  return std::nullopt;
}

RealizationAux build_realization_aux(const InterpolationData& data,
                                     double tol_pos) {
  const PickPair pq = build_pick_matrices(data);
  const PositivityReport positivity = check_positivity(pq.P, tol_pos);
  if (!positivity.strictly_positive)
    raise(ErrorCode::PickNotPositive,
          "min eigenvalue " + std::to_string(positivity.min_eigenvalue));

  const auto m = pq.P.rows();
  RealizationAux aux;
  aux.phi.resize(m);
  // The k-th column of Q - z_k P is the conjugated value vector, so this
  // channel makes the impedance reproduce v_k at z_k; the sign keeps the
  // channel equal to the plain value column whenever every value is i.
  for (Eigen::Index k = 0; k < m; ++k)
    aux.phi(k) = -std::conj(data.values[static_cast<std::size_t>(k)]);

  // Solves against the (positive) metric rather than forming the inverse.
  Eigen::LLT<Eigen::MatrixXcd> llt(pq.P);
  aux.A = llt.solve(pq.Q);
  aux.g = llt.solve(aux.phi);
  return aux;
}

LSystem build_pick_form(const InterpolationData& data, double tol_pos) {
  const PickPair pq = build_pick_matrices(data);
  const RealizationAux aux = build_realization_aux(data, tol_pos);

  LSystem sys;
  sys.T = aux.A + kI * (aux.g * (aux.g.adjoint() * pq.P));
  sys.g = aux.g;
  sys.metric = pq.P;
  sys.form = SystemForm::PickForm;
  if (all_values_i(data)) sys.source_nodes = data.nodes;
  return sys;
}

LSystem build_model_delta(const std::vector<cplx>& nodes) {
  if (nodes.empty()) raise(ErrorCode::EmptyData, "at least one node required");
  if (nodes.size() > static_cast<std::size_t>(kMaxNodes))
    raise(ErrorCode::DataTooLarge,
          "at most " + std::to_string(kMaxNodes) + " nodes supported");
  const auto n = static_cast<Eigen::Index>(nodes.size());

  LSystem sys;
  sys.T.setZero(n, n);
  sys.g.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx zk = nodes[static_cast<std::size_t>(k)];
    if (!(zk.imag() > 0.0))
      raise_indexed(ErrorCode::NodeNotInUpperHalfPlane, static_cast<std::size_t>(k) + 1);
    sys.T(k, k) = zk;
    sys.g(k) = std::sqrt(zk.imag());
    for (Eigen::Index j = k + 1; j < n; ++j) {
      const double yj = nodes[static_cast<std::size_t>(j)].imag();
      sys.T(k, j) = 2.0 * kI * std::sqrt(zk.imag() * yj);
    }
  }
  sys.form = SystemForm::ModelDelta;
  sys.source_nodes = nodes;
  return sys;
}

LSystem build_multiplication(cplx lambda0) {
  if (!(lambda0.imag() > 0.0))
    raise(ErrorCode::NotDissipative, "multiplication point must have Im > 0");
  LSystem sys;
  sys.T.resize(1, 1);
  sys.T(0, 0) = lambda0;
  sys.g.resize(1);
  sys.g(0) = std::sqrt(lambda0.imag());
  sys.form = SystemForm::Multiplication;
  sys.source_nodes = std::vector<cplx>{lambda0};
  return sys;
}

LSystem couple(const LSystem& first, const LSystem& second) {
  // The block formula is stated over Euclidean spaces; metric carriers are
  // flattened first, which leaves the transfer functions unchanged.
  const LSystem& a = first.euclidean() ? first : to_euclidean(first);
  const LSystem& b = second.euclidean() ? second : to_euclidean(second);
  const auto n1 = a.dim();
  const auto n2 = b.dim();

  LSystem sys;
  sys.T.setZero(n1 + n2, n1 + n2);
  sys.T.topLeftCorner(n1, n1) = a.T;
  sys.T.bottomRightCorner(n2, n2) = b.T;
  sys.T.topRightCorner(n1, n2) = 2.0 * kI * (a.g * b.g.adjoint());
  sys.g.resize(n1 + n2);
  sys.g.head(n1) = a.g;
  sys.g.tail(n2) = b.g;
  sys.form = SystemForm::Coupling;
  if (first.source_nodes && second.source_nodes) {
    std::vector<cplx> nodes = *first.source_nodes;
    nodes.insert(nodes.end(), second.source_nodes->begin(),
                 second.source_nodes->end());
    sys.source_nodes = std::move(nodes);
  }
  return sys;
}

LSystem to_euclidean(const LSystem& sys) {
  if (sys.euclidean()) return sys;
  const auto n = sys.dim();
  Eigen::LLT<Eigen::MatrixXcd> llt(*sys.metric);
  if (llt.info() != Eigen::Success)
    raise(ErrorCode::MetricNotPositive, "Cholesky factorization failed");
  const Eigen::MatrixXcd U = llt.matrixU(); // metric = U* U
  const Eigen::MatrixXcd Uinv =
      U.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(n, n));

  LSystem out;
  out.T = U * sys.T * Uinv;
  out.g = U * sys.g;
  out.form = sys.form;
  out.source_nodes = sys.source_nodes;
  return out;
}

EuclideanPair euclidean_parts(const LSystem& sys) {
  EuclideanPair out;
  if (sys.euclidean()) {
    out.re = ((sys.T + sys.T.adjoint()) / 2.0).eval();
    out.g = sys.g;
    return out;
  }
  const auto n = sys.dim();
  Eigen::LLT<Eigen::MatrixXcd> llt(*sys.metric);
  if (llt.info() != Eigen::Success)
    raise(ErrorCode::MetricNotPositive, "Cholesky factorization failed");
  const Eigen::MatrixXcd U = llt.matrixU();
  const Eigen::MatrixXcd Uinv =
      U.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(n, n));
  // The congruence sends the metric-self-adjoint part of T to a Hermitian
  // matrix, so any skew residue in U T U^{-1} is rounding noise and the
  // symmetrization discards it without touching the exact channel term.
  const Eigen::MatrixXcd flat = U * sys.T * Uinv;
  out.re = ((flat + flat.adjoint()) / 2.0).eval();
  out.g = U * sys.g;
  return out;
}

bool check_dissipativity(const LSystem& sys) {
  Eigen::MatrixXcd lhs, rhs;
  if (sys.euclidean()) {
    lhs = (sys.T - sys.T.adjoint()) / (2.0 * kI);
    rhs = sys.g * sys.g.adjoint();
  } else {
    const Eigen::MatrixXcd& P = *sys.metric;
    const Eigen::MatrixXcd Tsharp =
        Eigen::PartialPivLU<Eigen::MatrixXcd>(P).solve(sys.T.adjoint() * P);
    lhs = (sys.T - Tsharp) / (2.0 * kI);
    rhs = sys.g * (sys.g.adjoint() * P);
  }
  const double scale = std::max({1.0, lhs.norm(), rhs.norm()});
  return (lhs - rhs).norm() <= 1e-10 * scale;
}

bool check_minimality(const LSystem& sys, const std::vector<cplx>& probes) {
  const LSystem es = sys.euclidean() ? sys : to_euclidean(sys);
  const auto n = es.dim();

  std::vector<cplx> points = probes;
  if (points.empty()) {
    const double radius = 1.0 + es.T.norm();
    for (Eigen::Index j = 1; j <= n; ++j)
      points.push_back(-kI * (static_cast<double>(j) * radius));
  }
  if (points.size() < static_cast<std::size_t>(n))
    raise(ErrorCode::LengthMismatch,
          "need at least " + std::to_string(n) + " probe points");

  const Eigen::VectorXcd eigs = eigenvalues_of(es.T);
  Eigen::MatrixXcd columns(n, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < eigs.size(); ++k)
      dist = std::min(dist, std::abs(eigs(k) - points[j]));
    if (dist < 1e-10) raise_indexed(ErrorCode::ProbeNotRegular, j + 1);
    const Eigen::MatrixXcd shifted =
        es.T - points[j] * Eigen::MatrixXcd::Identity(n, n);
    columns.col(static_cast<Eigen::Index>(j)) =
        Eigen::PartialPivLU<Eigen::MatrixXcd>(shifted).solve(es.g);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(columns);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return n == 0;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-8 * sv(0)) ++rank;
  return rank == n;
}

bool check_unitary_equivalence(const LSystem& first, const LSystem& second,
                               const std::vector<cplx>& grid, double tol) {
  double worst = 0.0;
  for (const cplx& z : grid) {
    cplx w1, w2;
    try {
      w1 = transfer(first, z);
      w2 = transfer(second, z);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotRegularPoint)
        raise(ErrorCode::GridPointNotRegular, "grid point inside pole guard");
      throw;
    }
    worst = std::max(worst, std::abs(w1 - w2));
  }
  return worst <= tol;
}

std::vector<cplx> verification_grid(const LSystem& first, const LSystem& second) {
  double rho = 0.0;
  for (const LSystem* sys : {&first, &second}) {
    const Eigen::VectorXcd eigs = eigenvalues_of(sys->T);
    for (Eigen::Index k = 0; k < eigs.size(); ++k)
      rho = std::max(rho, std::abs(eigs(k)));
  }
  const double R = 1.0 + rho;
  std::vector<cplx> grid;
  grid.reserve(25);
  // Points sit in the lower half-plane, where every transfer function is a
  // contraction, at distance >= R from both spectra and from the real axis.
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double y : {-1.0, -1.5, -2.0, -2.5, -3.0})
      grid.emplace_back(x * R, y * R);
  return grid;
}

std::vector<cplx> blaschke_nodes(const LSystem& sys) {
  std::vector<cplx> nodes;
  if (sys.source_nodes) {
    nodes = *sys.source_nodes;
  } else {
    const EuclideanPair parts = euclidean_parts(sys);
    const Eigen::MatrixXcd clean =
        parts.re + cplx(0.0, 1.0) * (parts.g * parts.g.adjoint());
    const Eigen::VectorXcd eigs = eigenvalues_of(clean);
    nodes.assign(eigs.data(), eigs.data() + eigs.size());
  }
  // Sorted so the result does not depend on how the system was produced.
  std::sort(nodes.begin(), nodes.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return nodes;
}

InterpolationData sample_valid_data(std::uint64_t seed, std::size_t m) {
  if (m == 0) raise(ErrorCode::EmptyData, "m must be positive");
  if (m > static_cast<std::size_t>(kMaxNodes))
    raise(ErrorCode::DataTooLarge,
          "at most " + std::to_string(kMaxNodes) + " nodes supported");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> im_dist(0.2, 3.0);
  const auto draw_separated = [&](std::size_t count) {
    std::vector<cplx> points;
    while (points.size() < count) {
      const cplx candidate(re_dist(rng), im_dist(rng));
      if (std::abs(candidate - cplx(0.0, 1.0)) < 1e-3) continue;
      bool clear = true;
      for (const cplx& p : points)
        if (std::abs(candidate - p) < 0.05) { clear = false; break; }
      if (clear) points.push_back(candidate);
    }
    return points;
  };

  // The generator's impedance is Herglotz, so sampled values always land in
  // the upper half-plane; resampling only guards against ill-conditioned
  // draws.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::vector<cplx> nodes = draw_separated(m);
    const std::vector<cplx> lambdas = draw_separated(m);
    LSystem generator = build_multiplication(lambdas[0]);
    for (std::size_t j = 1; j < m; ++j)
      generator = couple(generator, build_multiplication(lambdas[j]));

    std::vector<cplx> values;
    values.reserve(m);
    for (const cplx& z : nodes) values.push_back(impedance(generator, z));

    try {
      InterpolationData data = validate_data(nodes, values);
      const PickPair pq = build_pick_matrices(data);
      const PositivityReport positivity = check_positivity(pq.P);
      if (positivity.strictly_positive && positivity.condition_estimate < 1e8)
        return data;
    } catch (const Error&) {
      // fall through to resample
    }
  }
  raise(ErrorCode::PickNotPositive,
        "sampling did not reach a well-conditioned data set");
}

} // namespace npls
