#pragma once

#include <vector>

#include "npls/lsystem.hpp"
#include "npls/types.hpp"

namespace npls {

struct EntropyValue {
  bool finite = true;
  double value = 0.0; // >= 0; meaningful only when finite
};

// Coupling channel loss, in [0, 1]; 1 exactly when the entropy is infinite.
using DissipationValue = double;

enum class RegimeKind { Infinite, MaximalFinite, SubMaximal };

const char* regime_name(RegimeKind kind) noexcept;

struct RegimeClassification {
  RegimeKind kind = RegimeKind::SubMaximal;
  std::vector<std::size_t> offending_nodes; // 1-based, nodes at i
};

// S = -ln |W(-i)|. Infinite when |W(-i)| underflows (< 1e-300) or when the
// system's Blaschke nodes contain i (within tol_node).
EntropyValue entropy_from_system(const LSystem& sys, double tol_node = kTolNode);

// S = (1/2) sum ln[(x^2 + (1+y)^2) / (x^2 + (1-y)^2)] over nodes x + iy;
// infinite when some node is at i.
EntropyValue entropy_from_nodes(const std::vector<cplx>& nodes,
                                double tol_node = kTolNode);

struct SingleNodeInvariants {
  EntropyValue entropy;
  DissipationValue dissipation = 0.0;
};

SingleNodeInvariants single_node_invariants(cplx lambda0, double tol_node = kTolNode);

// D = 1 - e^{-2S}; exactly 1 for infinite S.
DissipationValue dissipation_from_entropy(const EntropyValue& s);

DissipationValue dissipation_from_nodes(const std::vector<cplx>& nodes,
                                        double tol_node = kTolNode);

// D = 4 ||(T + iI)^{-1} g||^2 in the system's inner product.
DissipationValue dissipation_operator(const LSystem& sys);

// Additivity under coupling; infinity absorbs.
EntropyValue compose_entropy(const EntropyValue& a, const EntropyValue& b);

// d1 + d2 - d1 d2 (complementary factors multiply).
DissipationValue compose_dissipation(DissipationValue d1, DissipationValue d2);

// Two-factor coupling dissipation in closed form.
DissipationValue two_node_dissipation_closed(cplx lambda0, cplx mu0);

RegimeClassification classify_regime(const std::vector<cplx>& nodes,
                                     double tol_node = kTolNode);

struct ImaginaryAxisInvariants {
  EntropyValue entropy;
  DissipationValue dissipation = 0.0;
};

// Nodes i*a_k on the imaginary axis: S = sum ln |(1+a)/(1-a)|,
// D = 1 - prod ((1-a)/(1+a))^2. a_k = 1 yields infinite/1 when lenient,
// otherwise NodeAtI.
ImaginaryAxisInvariants imaginary_axis_invariants(const std::vector<double>& a,
                                                  bool lenient = true,
                                                  double tol_node = kTolNode);

// kappa = (1 - t) / (1 + t) with t = Im V(i); requires V(i) purely imaginary
// (|Re| < 1e-9) and 0 < t <= 1, NotApplicable otherwise.
double compute_kappa(const LSystem& sys);

} // namespace npls
