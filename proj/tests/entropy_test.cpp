#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "checks.hpp"
#include "npls/analytic.hpp"
#include "npls/entropy.hpp"
#include "npls/errors.hpp"
#include "npls/interpolation.hpp"
#include "npls/lsystem.hpp"

using namespace npls;
using namespace npls::test;
using namespace std::complex_literals;

namespace {

const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);
const double kLn5 = std::log(5.0);
const double kLn6 = std::log(6.0);

LSystem worked_coupling() {
  return couple(build_multiplication(2.0i), build_multiplication(3.0i));
}

}  // namespace

TEST_CASE("entropy of the worked coupling") {
  auto s = entropy_from_system(worked_coupling());
  REQUIRE(s.finite);
  CHECK(near_rel(s.value, kLn6, 1e-12));
}

TEST_CASE("entropy of the symmetric pair model") {
  auto s = entropy_from_system(build_model_delta({1.0 + 2.0i, -1.0 + 2.0i}));
  REQUIRE(s.finite);
  CHECK(near_rel(s.value, kLn5, 1e-12));
}

TEST_CASE("entropy is infinite for a node at i") {
  CHECK_FALSE(entropy_from_system(build_multiplication(1.0i)).finite);
}

TEST_CASE("node-formula entropy at the reference sets") {
  auto s1 = entropy_from_nodes({2.0i, 3.0i});
  REQUIRE(s1.finite);
  CHECK(near_rel(s1.value, kLn6, 1e-12));
  auto s2 = entropy_from_nodes({1.0 + 2.0i, -1.0 + 2.0i});
  REQUIRE(s2.finite);
  CHECK(near_rel(s2.value, kLn5, 1e-12));
}

TEST_CASE("node-formula entropy decreases to zero along small arguments") {
  double previous = entropy_from_nodes({cplx(0.0, 0.1)}).value;
  for (double a : {1e-2, 1e-3, 1e-4, 1e-5}) {
    double current = entropy_from_nodes({cplx(0.0, a)}).value;
    CHECK(current > 0.0);
    CHECK(current < previous);
    previous = current;
  }
  CHECK(previous < 1e-4);
}

TEST_CASE("single-node invariants at the reference points") {
  auto at_2i = single_node_invariants(2.0i);
  CHECK(near_rel(at_2i.entropy.value, kLn3, 1e-12));
  CHECK(near_rel(at_2i.dissipation, 8.0 / 9.0, 1e-12));

  auto at_3i = single_node_invariants(3.0i);
  CHECK(near_rel(at_3i.entropy.value, kLn2, 1e-12));
  CHECK(near_rel(at_3i.dissipation, 3.0 / 4.0, 1e-12));

  auto off_axis = single_node_invariants(1.0 + 2.0i);
  CHECK(near_rel(off_axis.entropy.value, 0.5 * kLn5, 1e-12));
  CHECK(near_rel(off_axis.dissipation, 4.0 / 5.0, 1e-12));

  auto at_i = single_node_invariants(1.0i);
  CHECK_FALSE(at_i.entropy.finite);
  CHECK(at_i.dissipation == 1.0);
}

TEST_CASE("dissipation from entropy") {
  EntropyValue s{true, kLn6};
  CHECK(near_rel(dissipation_from_entropy(s), 35.0 / 36.0, 1e-15));
  CHECK(dissipation_from_entropy(EntropyValue{true, 0.0}) == 0.0);
  CHECK(dissipation_from_entropy(EntropyValue{false, 0.0}) == 1.0);
}

TEST_CASE("dissipation from nodes at the reference sets") {
  CHECK(near_rel(dissipation_from_nodes({2.0i, 3.0i}), 35.0 / 36.0, 1e-12));
  CHECK(near_rel(dissipation_from_nodes({1.0 + 2.0i, -1.0 + 2.0i}), 24.0 / 25.0,
                 1e-12));
  CHECK(near_rel(dissipation_from_nodes({1.0 + 2.0i, -1.0 + 2.0i, 3.0i}), 0.99,
                 1e-12));
}

TEST_CASE("operator dissipation across realizations") {
  CHECK(near_rel(dissipation_operator(worked_coupling()), 35.0 / 36.0, 1e-12));
  CHECK(near_rel(dissipation_operator(build_pick_form(validate_data({2.0i, 3.0i}))),
                 35.0 / 36.0, 1e-12));
  CHECK(near_rel(dissipation_operator(build_multiplication(2.0i)), 8.0 / 9.0,
                 1e-12));
  CHECK(near_rel(dissipation_operator(build_multiplication(1.0i)), 1.0, 1e-12));
}

TEST_CASE("operator dissipation equals one minus the squared transfer modulus") {
  for (unsigned seed : {2u, 14u, 27u}) {
    auto sys = build_pick_form(sample_valid_data(seed, 3));
    double w_mod = std::abs(transfer(sys, -1.0i));
    CHECK(near(dissipation_operator(sys), 1.0 - w_mod * w_mod, 1e-10));
  }
}

TEST_CASE("entropy composition") {
  auto sum = compose_entropy(EntropyValue{true, kLn3}, EntropyValue{true, kLn2});
  REQUIRE(sum.finite);
  CHECK(near_rel(sum.value, kLn6, 1e-14));
  auto same = compose_entropy(EntropyValue{true, 0.7}, EntropyValue{true, 0.0});
  CHECK(near_rel(same.value, 0.7, 1e-15));
  CHECK_FALSE(compose_entropy(EntropyValue{true, 0.7}, EntropyValue{false, 0.0}).finite);
}

TEST_CASE("dissipation composition") {
  CHECK(near_rel(compose_dissipation(8.0 / 9.0, 3.0 / 4.0), 35.0 / 36.0, 1e-14));
  CHECK(compose_dissipation(0.3, 0.0) == 0.3);
  CHECK(compose_dissipation(0.3, 1.0) == 1.0);
}

TEST_CASE("closed-form two-node dissipation") {
  CHECK(near_rel(two_node_dissipation_closed(2.0i, 3.0i), 35.0 / 36.0, 1e-12));
  CHECK(two_node_dissipation_closed(1.0i, 1.0i) == 1.0);
  for (unsigned seed : {8u, 19u}) {
    auto nodes = random_nodes(seed, 2);
    double composed = compose_dissipation(single_node_invariants(nodes[0]).dissipation,
                                          single_node_invariants(nodes[1]).dissipation);
    CHECK(near(two_node_dissipation_closed(nodes[0], nodes[1]), composed, 1e-12));
  }
}

TEST_CASE("regime classification") {
  auto infinite = classify_regime({1.0i, 2.0 + 1.0i});
  CHECK(infinite.kind == RegimeKind::Infinite);
  REQUIRE(infinite.offending_nodes.size() == 1);
  CHECK(infinite.offending_nodes[0] == 1);

  CHECK(classify_regime({2.0i, 3.0i}).kind == RegimeKind::MaximalFinite);
  CHECK(classify_regime({1.0 + 2.0i, -1.0 + 2.0i}).kind == RegimeKind::SubMaximal);
  CHECK(std::string(regime_name(RegimeKind::MaximalFinite)) == "maximal_finite");
}

TEST_CASE("imaginary axis invariants") {
  auto two = imaginary_axis_invariants({2.0, 3.0});
  CHECK(near_rel(two.entropy.value, kLn6, 1e-12));
  CHECK(near_rel(two.dissipation, 35.0 / 36.0, 1e-12));

  auto repeated = imaginary_axis_invariants({0.5, 0.5, 0.5, 0.5});
  CHECK(near_rel(repeated.entropy.value, 4.0 * std::log(3.0), 1e-12));

  auto small = imaginary_axis_invariants({1e-4, 1e-4});
  CHECK(near(small.entropy.value, 4e-4, 1e-10));

  auto at_one = imaginary_axis_invariants({1.0});
  CHECK_FALSE(at_one.entropy.finite);
  CHECK(at_one.dissipation == 1.0);
  CHECK(throws_code(ErrorCode::NodeAtI, [] {
    imaginary_axis_invariants({1.0}, false);
  }, "(1)"));
  CHECK(throws_code(ErrorCode::NodeNotInUpperHalfPlane, [] {
    imaginary_axis_invariants({-0.5});
  }));
}

TEST_CASE("kappa at the reference systems") {
  CHECK(near_rel(compute_kappa(build_model_delta({1.0 + 2.0i, -1.0 + 2.0i})), 0.2,
                 1e-12));
  CHECK(near(compute_kappa(build_multiplication(1.0i)), 0.0, 1e-12));
  CHECK(throws_code(ErrorCode::NotApplicable, [] {
    compute_kappa(build_multiplication(2.0i));
  }));
  CHECK(throws_code(ErrorCode::NotApplicable, [] {
    compute_kappa(build_multiplication(1.0 + 2.0i));
  }));
}

TEST_CASE("entropy and dissipation routes agree on random node sets") {
  for (unsigned seed = 0; seed < 60; ++seed) {
    auto nodes = random_nodes(seed, static_cast<int>(seed % 6) + 1);
    auto model = build_model_delta(nodes);
    auto s_sys = entropy_from_system(model);
    auto s_nodes = entropy_from_nodes(nodes);
    REQUIRE(s_sys.finite == s_nodes.finite);
    CHECK(near(s_sys.value, s_nodes.value, 1e-9));
    double d_nodes = dissipation_from_nodes(nodes);
    CHECK(near(dissipation_operator(model), d_nodes, 1e-9));
    CHECK(near(dissipation_from_entropy(s_sys), d_nodes, 1e-9));
    CHECK(s_nodes.value > 0.0);
  }
}

TEST_CASE("entropy is additive under coupling") {
  auto nodes = random_nodes(71, 3);
  LSystem chain = build_multiplication(nodes[0]);
  double total = single_node_invariants(nodes[0]).entropy.value;
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    chain = couple(chain, build_multiplication(nodes[k]));
    total += single_node_invariants(nodes[k]).entropy.value;
  }
  CHECK(near(entropy_from_system(chain).value, total, 1e-10));
  CHECK(near(dissipation_operator(chain), dissipation_from_nodes(nodes), 1e-10));
}

TEST_CASE("entropy decays monotonically along horizontal displacement") {
  double previous = entropy_from_nodes({cplx(0.0, 2.0)}).value;
  for (int k = 1; k <= 10; ++k) {
    double current = entropy_from_nodes({cplx(static_cast<double>(k), 2.0)}).value;
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("purely imaginary placement maximizes entropy at fixed heights") {
  for (double b : {0.5, 2.0}) {
    double on_axis = entropy_from_nodes({cplx(0.0, b)}).value;
    for (double a : {0.1, 0.5, 1.0, 2.0}) {
      CHECK(on_axis > entropy_from_nodes({cplx(a, b)}).value);
      CHECK(on_axis > entropy_from_nodes({cplx(-a, b)}).value);
    }
  }
}

TEST_CASE("small-argument entropy expansion") {
  std::vector<std::vector<double>> cases{{1e-2}, {5e-3, 1e-3}, {1e-2, 1e-2, 2e-3}};
  for (const auto& a : cases) {
    double sum_a = 0.0;
    double sum_a3 = 0.0;
    std::vector<cplx> nodes;
    for (double ak : a) {
      sum_a += ak;
      sum_a3 += ak * ak * ak;
      nodes.push_back(cplx(0.0, ak));
    }
    double s = entropy_from_nodes(nodes).value;
    CHECK(std::abs(s - 2.0 * sum_a) <= sum_a3);
  }
}
