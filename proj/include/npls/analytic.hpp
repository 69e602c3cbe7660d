#pragma once

#include <functional>
#include <vector>

#include "npls/lsystem.hpp"
#include "npls/types.hpp"

namespace npls {

// W(z) = 1 - 2i <(T - zI)^{-1} g, g>. Throws NotRegularPoint when z is within
// 1e-12 * (1 + |z|) of an eigenvalue of T.
cplx transfer(const LSystem& sys, cplx z);

// V(z) = <(Re T - zI)^{-1} g, g> with the metric-aware real part; for the
// Pick form this coincides with phi* (Q - zP)^{-1} phi. Throws NotRegularPoint
// near the (real) spectrum of Re T.
cplx impedance(const LSystem& sys, cplx z);

// v = i (w - 1) / (w + 1); PoleAtMinusOne at w = -1.
cplx cayley_w_to_v(cplx w);

// w = (1 - iv) / (1 + iv); PoleAtI at v = i.
cplx cayley_v_to_w(cplx v);

// prod_k (z - conj z_k) / (z - z_k); PoleAtNode(k) when z hits a node.
cplx blaschke_transfer(const std::vector<cplx>& nodes, cplx z);

// i (prod(z - conj z_k) - prod(z - z_k)) / (prod(z - conj z_k) + prod(z - z_k));
// DenominatorZero when the denominator vanishes.
cplx impedance_closed_form(const std::vector<cplx>& nodes, cplx z);

// Impedance of the two-factor coupling of multiplication systems at
// lambda0, mu0, in closed rational form.
cplx coupled_impedance_two(cplx lambda0, cplx mu0, cplx z);

struct HerglotzReport {
  double min_imag = 0.0;
  bool all_positive = false;
  std::size_t evaluated = 0;
  std::size_t skipped = 0; // pole-adjacent grid points
};

// 10x10 tensor grid, Re in [-5,5], Im in [0.1,5].
std::vector<cplx> default_herglotz_grid();

// Scans Im f > 0 over the grid; points where the evaluator throws a pole
// error are skipped and counted.
HerglotzReport herglotz_scan(const std::function<cplx(cplx)>& evaluator,
                             const std::vector<cplx>& grid = default_herglotz_grid());

} // namespace npls
