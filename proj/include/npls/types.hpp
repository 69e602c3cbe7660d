#pragma once

#include <complex>

namespace npls {

using cplx = std::complex<double>;

inline constexpr int kMaxNodes = 64;          // dense-solver scale cap
inline constexpr double kTolPos = 1e-10;      // relative positivity threshold
inline constexpr double kTolNode = 1e-9;      // node coincidence tolerance
inline constexpr double kTolDuplicate = 1e-9; // relative duplicate-node tolerance
inline constexpr double kTolResolvent = 1e-12; // relative pole-proximity guard

} // namespace npls
