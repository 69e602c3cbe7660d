#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "checks.hpp"
#include "npls/analytic.hpp"
#include "npls/errors.hpp"
#include "npls/network.hpp"

using namespace npls;
using namespace npls::test;
using namespace std::complex_literals;

namespace {

SymmetricConfig pair_config() { return detect_symmetric({1.0 + 2.0i, -1.0 + 2.0i}); }

SymmetricConfig mixed_config() {
  return detect_symmetric({1.0 + 2.0i, -1.0 + 2.0i, 3.0i});
}

}  // namespace

TEST_CASE("symmetric detection of a mirrored pair") {
  auto config = pair_config();
  REQUIRE(config.pairs.size() == 1);
  CHECK(config.imag_nodes.empty());
  CHECK(near(config.pairs[0].a, 1.0, 1e-12));
  CHECK(near(config.pairs[0].b, 2.0, 1e-12));
}

TEST_CASE("symmetric detection of a pair plus an imaginary node") {
  auto config = mixed_config();
  REQUIRE(config.pairs.size() == 1);
  REQUIRE(config.imag_nodes.size() == 1);
  CHECK(near(config.imag_nodes[0], 3.0, 1e-12));
}

TEST_CASE("symmetric detection rejects unpaired nodes") {
  CHECK(throws_code(ErrorCode::UnpairedNode, [] {
    detect_symmetric({1.0 + 2.0i, 5.0i, 7.0i});
  }, "no partner at the mirrored position"));
  CHECK(throws_code(ErrorCode::UnpairedNode, [] {
    detect_symmetric({1.0 + 2.0i, 5.0i, 7.0i});
  }, "(1)"));
}

TEST_CASE("symmetric detection reconstructs the node multiset") {
  std::vector<cplx> nodes{0.7 + 1.1i, 2.5i, -0.7 + 1.1i, 0.4i, -2.0 + 0.3i,
                          2.0 + 0.3i};
  auto config = detect_symmetric(nodes);
  REQUIRE(config.pairs.size() == 2);
  REQUIRE(config.imag_nodes.size() == 2);
  std::vector<cplx> rebuilt;
  for (const auto& p : config.pairs) {
    rebuilt.push_back(cplx(p.a, p.b));
    rebuilt.push_back(cplx(-p.a, p.b));
  }
  for (double b : config.imag_nodes) rebuilt.push_back(cplx(0.0, b));
  REQUIRE(rebuilt.size() == nodes.size());
  for (cplx z : nodes) {
    bool found = false;
    for (cplx w : rebuilt)
      if (std::abs(z - w) <= 1e-9) found = true;
    CHECK(found);
  }
}

TEST_CASE("model impedance constants") {
  auto mi = model_impedance(pair_config());
  CHECK(mi.A0 == 0.0);
  REQUIRE(mi.branches.size() == 1);
  CHECK(near(mi.branches[0].A, 4.0, 1e-12));
  CHECK(near(mi.branches[0].B, std::sqrt(5.0), 1e-12));

  auto mixed = model_impedance(mixed_config());
  CHECK(near(mixed.A0, 3.0, 1e-12));
  REQUIRE(mixed.branches.size() == 1);

  SymmetricConfig caps;
  caps.imag_nodes = {1.0, 1.5};
  auto capacitive = model_impedance(caps);
  CHECK(near(capacitive.A0, 2.5, 1e-12));
  CHECK(capacitive.branches.empty());
}

TEST_CASE("model impedance evaluation") {
  auto mi = model_impedance(pair_config());
  CHECK(near(eval_model_impedance(mi, 1.0i), cplx(0.0, 2.0 / 3.0), 1e-14));
  CHECK(std::abs(eval_model_impedance(mi, cplx(0.0, 1e6))) <= 1e-5);
  CHECK(throws_code(ErrorCode::PoleHit, [&mi] {
    eval_model_impedance(mi, cplx(std::sqrt(5.0), 0.0));
  }));

  auto mixed = model_impedance(mixed_config());
  CHECK(throws_code(ErrorCode::PoleHit, [&mixed] {
    eval_model_impedance(mixed, cplx(0.0, 0.0));
  }));
  auto scan = herglotz_scan(
      [&mixed](cplx z) { return eval_model_impedance(mixed, z); });
  CHECK(scan.all_positive);
}

TEST_CASE("canonical pair impedance interpolates its nodes") {
  CHECK(near(canonical_pair_impedance(1.0, 2.0, 1.0 + 2.0i), 1.0i, 1e-13));
  CHECK(near(canonical_pair_impedance(1.0, 2.0, -1.0 + 2.0i), 1.0i, 1e-13));
  CHECK(near(canonical_pair_impedance(1.0, 2.0, cplx(0.0, 0.0)), cplx(0.0, 0.0),
             1e-15));
  CHECK(near(canonical_pair_impedance(1.0, 2.0, 1.0i), cplx(0.0, 2.0 / 3.0),
             1e-14));
}

TEST_CASE("pair-plus-imaginary constants") {
  auto params = pair_plus_imag_params(1.0, 2.0, 3.0);
  CHECK(near_rel(params.B2, 5.0, 1e-14));
  CHECK(near_rel(params.B2_tilde, 17.0, 1e-12));
  CHECK(near_rel(params.C, 15.0 / 17.0, 1e-12));
  CHECK(near_rel(params.A, 104.0 / 17.0, 1e-12));

  auto vanishing = pair_plus_imag_params(1.0, 2.0, 1e-8);
  CHECK(std::abs(vanishing.C) <= 1e-6);
  CHECK(near(vanishing.A, 4.0, 1e-6));
}

TEST_CASE("pair-plus-imaginary impedance interpolates both node kinds") {
  std::vector<std::array<double, 3>> cases{{1.0, 2.0, 3.0}, {2.0, 1.0, 1.0},
                                           {0.5, 1.5, 2.5}};
  for (auto [a, b, c] : cases) {
    auto params = pair_plus_imag_params(a, b, c);
    auto v = [&params](cplx z) {
      return -params.C / z + params.A * z / (params.B2_tilde - z * z);
    };
    CHECK(near(v(cplx(a, b)), 1.0i, 1e-12));
    CHECK(near(v(cplx(-a, b)), 1.0i, 1e-12));
    CHECK(near(v(cplx(0.0, c)), 1.0i, 1e-12));
  }
}

TEST_CASE("lc synthesis of a single pair") {
  auto net = synthesize_lc(model_impedance(pair_config()));
  CHECK_FALSE(net.C0.has_value());
  REQUIRE(net.branches.size() == 1);
  CHECK(near(net.branches[0].L, 0.8, 1e-12));
  CHECK(near(net.branches[0].C, 0.25, 1e-12));
}

TEST_CASE("lc synthesis of the mixed configuration") {
  auto net = synthesize_lc(model_impedance(mixed_config()));
  REQUIRE(net.C0.has_value());
  CHECK(near(*net.C0, 1.0 / 3.0, 1e-12));
  REQUIRE(net.branches.size() == 1);
  CHECK(near(net.branches[0].L, 0.8, 1e-12));
  CHECK(near(net.branches[0].C, 0.25, 1e-12));
}

TEST_CASE("lc synthesis of a purely capacitive configuration") {
  SymmetricConfig config;
  config.imag_nodes = {2.0};
  auto net = synthesize_lc(model_impedance(config));
  REQUIRE(net.C0.has_value());
  CHECK(near(*net.C0, 0.5, 1e-14));
  CHECK(net.branches.empty());
}

TEST_CASE("lc synthesis rejects an empty impedance") {
  CHECK(throws_code(ErrorCode::EmptyImpedance,
                    [] { synthesize_lc(ModelImpedance{}); }));
}

TEST_CASE("network impedance of the single-pair circuit") {
  auto net = synthesize_lc(model_impedance(pair_config()));
  CHECK(near(network_impedance(net, cplx(1.0, 0.0)), cplx(2.0 / 3.0, 0.0), 1e-12));
  for (double p : {0.3, 1.7, 4.2}) {
    cplx z = network_impedance(net, cplx(p, 0.0));
    CHECK(z.real() > 0.0);
    CHECK(std::abs(z.imag()) <= 1e-12);
  }
  double resonance = 1.0 / std::sqrt(net.branches[0].L * net.branches[0].C);
  CHECK(throws_code(ErrorCode::PoleHit, [&net, resonance] {
    network_impedance(net, cplx(0.0, resonance));
  }));
}

TEST_CASE("network impedance reproduces the source impedance") {
  auto mi = model_impedance(mixed_config());
  auto net = synthesize_lc(mi);
  for (int k = 0; k < 50; ++k) {
    cplx p(0.05 + 0.08 * k, -2.0 + 4.0 * k / 49.0);
    cplx expected = eval_model_impedance(mi, 1.0i * p) / 1.0i;
    CHECK(near(network_impedance(net, p), expected, 1e-12));
  }
}

TEST_CASE("network impedance is positive-real") {
  auto net = synthesize_lc(model_impedance(mixed_config()));
  for (int k = 0; k < 40; ++k) {
    cplx p(0.1 + 0.11 * k, -3.0 + 6.0 * k / 39.0);
    CHECK(network_impedance(net, p).real() >= -1e-12);
  }
}

TEST_CASE("netlist for the single-pair circuit") {
  auto net = synthesize_lc(model_impedance(pair_config()));
  CHECK(emit_netlist(net) == "L1 1 2 0.8\nC1 1 2 0.25\n");
}

TEST_CASE("netlist for the mixed circuit") {
  auto net = synthesize_lc(model_impedance(mixed_config()));
  CHECK(emit_netlist(net) ==
        "C0 1 2 0.333333333333\nL1 2 3 0.8\nC1 2 3 0.25\n");
}

TEST_CASE("netlist for a purely capacitive circuit") {
  SymmetricConfig config;
  config.imag_nodes = {2.5};
  auto net = synthesize_lc(model_impedance(config));
  CHECK(emit_netlist(net) == "C0 1 2 0.4\n");
}
