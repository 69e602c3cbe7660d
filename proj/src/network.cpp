#include "npls/network.hpp"

#include <cmath>
#include <cstdio>

#include "npls/errors.hpp"

namespace npls {

namespace {

std::string fmt12(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

} // namespace

SymmetricConfig detect_symmetric(const std::vector<cplx>& nodes, double tol) {
  SymmetricConfig config;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (used[k]) continue;
    const cplx zk = nodes[k];
    if (!(zk.imag() > 0.0))
      raise_indexed(ErrorCode::NodeNotInUpperHalfPlane, k + 1);
    used[k] = true;
    if (std::abs(zk.real()) < tol) {
      config.imag_nodes.push_back(zk.imag());
      continue;
    }
    bool matched = false;
    for (std::size_t j = k + 1; j < nodes.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(nodes[j] + std::conj(zk)) < tol) {
        used[j] = true;
        config.pairs.push_back({(std::abs(zk.real()) + std::abs(nodes[j].real())) / 2.0,
                                (zk.imag() + nodes[j].imag()) / 2.0});
        matched = true;
        break;
      }
    }
    if (!matched)
      raise_indexed(ErrorCode::UnpairedNode, k + 1,
                    "no partner at the mirrored position");
  }
  return config;
}

ModelImpedance model_impedance(const SymmetricConfig& config) {
  ModelImpedance mi;
  for (double b : config.imag_nodes) mi.A0 += b;
  for (const SymmetricConfig::Pair& pair : config.pairs)
    mi.branches.push_back(
        {2.0 * pair.b, std::sqrt(pair.a * pair.a + pair.b * pair.b)});
  return mi;
}

cplx eval_model_impedance(const ModelImpedance& mi, cplx z) {
  cplx value = 0.0;
  if (mi.A0 > 0.0) {
    if (std::abs(z) < 1e-12)
      raise(ErrorCode::PoleHit, "pole at z = 0");
    value -= mi.A0 / z;
  }
  for (const ModelImpedance::Branch& branch : mi.branches) {
    const double b2 = branch.B * branch.B;
    const cplx denom = b2 - z * z;
    if (std::abs(denom) <= 1e-12 * (1.0 + b2 + std::norm(z)))
      raise(ErrorCode::PoleHit, "resonance pole at z^2 = B^2");
    value += branch.A * z / denom;
  }
  return value;
}

cplx canonical_pair_impedance(double a, double b, cplx z) {
  ModelImpedance mi;
  mi.branches.push_back({2.0 * b, std::sqrt(a * a + b * b)});
  return eval_model_impedance(mi, z);
}

PairImagParams pair_plus_imag_params(double a, double b, double c) {
  PairImagParams params;
  params.B2 = a * a + b * b;
  params.B2_tilde = params.B2 + 2.0 * b * c;
  params.C = c * params.B2 / params.B2_tilde;
  params.A = (2.0 * b + c) - params.C;
  return params;
}

LCNetwork synthesize_lc(const ModelImpedance& mi) {
  if (mi.branches.empty() && !(mi.A0 > 0.0))
    raise(ErrorCode::EmptyImpedance, "nothing to synthesize");
  LCNetwork net;
  if (mi.A0 > 0.0) net.C0 = 1.0 / mi.A0;
  for (const ModelImpedance::Branch& branch : mi.branches)
    net.branches.push_back(
        {branch.A / (branch.B * branch.B), 1.0 / branch.A});
  return net;
}

cplx network_impedance(const LCNetwork& net, cplx p) {
  cplx z = 0.0;
  if (net.C0) {
    if (std::abs(p) < 1e-12) raise(ErrorCode::PoleHit, "pole at p = 0");
    z += 1.0 / (*net.C0 * p);
  }
  for (const LCNetwork::Branch& branch : net.branches) {
    const cplx denom = branch.L * branch.C * p * p + 1.0;
    if (std::abs(denom) <= 1e-12 * (1.0 + std::abs(branch.L * branch.C * p * p)))
      raise(ErrorCode::PoleHit, "branch resonance");
    z += branch.L * p / denom;
  }
  return z;
}

std::string emit_netlist(const LCNetwork& net) {
  std::string text;
  int node = 1;
  if (net.C0) {
    text += "C0 1 2 " + fmt12(*net.C0) + "\n";
    node = 2;
  }
  for (std::size_t k = 0; k < net.branches.size(); ++k) {
    const std::string span =
        " " + std::to_string(node) + " " + std::to_string(node + 1) + " ";
    text += "L" + std::to_string(k + 1) + span + fmt12(net.branches[k].L) + "\n";
    text += "C" + std::to_string(k + 1) + span + fmt12(net.branches[k].C) + "\n";
    ++node;
  }
  return text;
}

} // namespace npls
