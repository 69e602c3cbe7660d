#pragma once

#include <string>

#include "npls/interpolation.hpp"
#include "npls/lsystem.hpp"
#include "npls/types.hpp"

namespace npls {

// Numbers in reports carry 12 significant digits.
std::string format_number(double x);

struct EvalGrid {
  double re0 = 0.0, re1 = 0.0;
  double im0 = 0.0, im1 = 0.0;
  std::size_t steps = 1; // steps x steps tensor grid
};

// Pick positivity, entropy (node and system routes), dissipation (three
// routes), regime, kappa; deterministic JSON text.
std::string analyze_report(const InterpolationData& data,
                           double tol_pos = kTolPos,
                           double tol_node = kTolNode);

struct VerifyOutcome {
  std::string json;
  bool all_passed = false;
};

// Cross-checks: transfer agreement of the three realizations, Cayley duality,
// invariant route agreement, interpolation, and the multiplication theorem.
VerifyOutcome verify_report(const InterpolationData& data,
                            double tol_pos = kTolPos);

std::string regimes_report(const InterpolationData& data,
                           double tol_node = kTolNode);

// CSV "z_re,z_im,f_re,f_im", rows over the tensor grid (imaginary part is the
// outer loop). func: 'W' or 'V'.
std::string eval_csv(const LSystem& sys, char func, const EvalGrid& grid);

// CSV "omega,z_re,z_im": impedance of the synthesized network at
// p = sigma + i*omega, sigma = 1e-3, over a fixed logarithmic sweep.
std::string bode_csv(const InterpolationData& data);

// Netlist for the symmetric configuration of the data's nodes.
std::string synth_netlist(const InterpolationData& data);

} // namespace npls
