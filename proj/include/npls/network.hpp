#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npls/types.hpp"

namespace npls {

// Node set closed under z -> -conj(z): pairs (+-a + ib, a > 0) plus purely
// imaginary nodes ib.
struct SymmetricConfig {
  struct Pair {
    double a = 0.0; // |Re|
    double b = 0.0; // Im
  };
  std::vector<Pair> pairs;
  std::vector<double> imag_nodes; // imaginary parts b_j
};

// V(z) = -A0/z + sum A_k z / (B_k^2 - z^2); A0 = 0 when no purely imaginary
// nodes are present.
struct ModelImpedance {
  double A0 = 0.0;
  struct Branch {
    double A = 0.0;
    double B = 0.0; // resonance level, B^2 = a^2 + b^2 for a pure pair
  };
  std::vector<Branch> branches;
};

// One symmetric pair (+-a + ib) joined with one imaginary node ic.
struct PairImagParams {
  double B2 = 0.0;       // a^2 + b^2
  double B2_tilde = 0.0; // B^2 + 2bc, shifted resonance
  double C = 0.0;        // c B^2 / B2_tilde, in (0, c)
  double A = 0.0;        // (2b + c) - C, > 2b
};

// Series one-port: optional series capacitor C0 followed by parallel L/C
// tanks, Z(p) = 1/(C0 p) + sum L_k p / (L_k C_k p^2 + 1).
struct LCNetwork {
  std::optional<double> C0;
  struct Branch {
    double L = 0.0;
    double C = 0.0;
  };
  std::vector<Branch> branches;
};

// Matches nodes into +-a + ib pairs (tolerance |z_j + conj(z_k)| < tol,
// absolute); |Re| < tol goes to imag_nodes. Throws UnpairedNode(k) when a
// node with a real part has no mirror partner.
SymmetricConfig detect_symmetric(const std::vector<cplx>& nodes,
                                 double tol = kTolNode);

// A0 = sum b_j over imaginary nodes; per pair A = 2b, B = sqrt(a^2 + b^2).
ModelImpedance model_impedance(const SymmetricConfig& config);

// PoleHit at z = 0 (when A0 > 0) or z^2 = B_k^2.
cplx eval_model_impedance(const ModelImpedance& mi, cplx z);

// A z / (B^2 - z^2) for a single pair.
cplx canonical_pair_impedance(double a, double b, cplx z);

PairImagParams pair_plus_imag_params(double a, double b, double c);

// C0 = 1/A0 (absent when A0 = 0); L_k = A_k / B_k^2, C_k = 1/A_k.
// EmptyImpedance when there is nothing to synthesize.
LCNetwork synthesize_lc(const ModelImpedance& mi);

// Z(p); equals (1/i) V(ip) for the source impedance.
cplx network_impedance(const LCNetwork& net, cplx p);

// Text netlist: `C0 1 2 <val>` when present, then branch k as parallel
// `Lk/Ck` between consecutive nodes; 12 significant digits, LF endings.
std::string emit_netlist(const LCNetwork& net);

} // namespace npls
