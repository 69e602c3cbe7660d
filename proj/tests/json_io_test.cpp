#include <doctest.h>

#include <complex>
#include <string>
#include <vector>

#include "checks.hpp"
#include "npls/errors.hpp"
#include "npls/interpolation.hpp"
#include "npls/json_io.hpp"
#include "npls/lsystem.hpp"

using namespace npls;
using namespace npls::test;
using namespace std::complex_literals;

TEST_CASE("data parsing with explicit values") {
  auto data = data_from_json(
      R"({"nodes":[{"re":0.0,"im":2.0},{"re":1.0,"im":1.0}],)"
      R"("values":[{"re":0.0,"im":1.0},{"re":0.5,"im":0.8}]})");
  REQUIRE(data.nodes.size() == 2);
  CHECK(data.nodes[1] == 1.0 + 1.0i);
  CHECK(data.values[1] == 0.5 + 0.8i);
  CHECK_FALSE(data.values_defaulted);
}

TEST_CASE("data parsing defaults missing or null values") {
  auto missing = data_from_json(R"({"nodes":[{"re":0.0,"im":2.0}]})");
  CHECK(missing.values_defaulted);
  CHECK(missing.values[0] == 1.0i);
  auto null_values =
      data_from_json(R"({"nodes":[{"re":0.0,"im":2.0}],"values":null})");
  CHECK(null_values.values_defaulted);
}

TEST_CASE("data parsing rejects malformed documents") {
  CHECK(throws_code(ErrorCode::ParseError, [] { data_from_json("{\"nodes\":["); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { data_from_json("[]"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { data_from_json("{}"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    data_from_json(R"({"nodes":[{"re":0.0}]})");
  }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    data_from_json(R"({"nodes":[[0.0,2.0]]})");
  }));
}

TEST_CASE("data parsing surfaces validation failures") {
  CHECK(throws_code(ErrorCode::NodeNotInUpperHalfPlane, [] {
    data_from_json(R"({"nodes":[{"re":0.0,"im":-2.0}]})");
  }));
  CHECK(throws_code(ErrorCode::ValueNotInUpperHalfPlane, [] {
    data_from_json(R"({"nodes":[{"re":0.0,"im":2.0}],"values":[{"re":0.0,"im":-1.0}]})");
  }));
}

TEST_CASE("data round trip is bit-exact") {
  auto data = sample_valid_data(33, 4);
  auto text = data_to_json(data);
  auto parsed = data_from_json(text);
  REQUIRE(parsed.nodes.size() == data.nodes.size());
  for (std::size_t k = 0; k < data.nodes.size(); ++k) {
    CHECK(parsed.nodes[k] == data.nodes[k]);
    CHECK(parsed.values[k] == data.values[k]);
  }
  CHECK(data_to_json(parsed) == text);
}

TEST_CASE("system round trip preserves every representation detail") {
  auto pick = build_pick_form(validate_data({2.0i, 3.0i}));
  auto text = lsystem_to_json(pick);
  auto parsed = lsystem_from_json(text);
  CHECK(parsed.form == SystemForm::PickForm);
  CHECK(max_abs_diff(parsed.T, pick.T) == 0.0);
  CHECK((parsed.g - pick.g).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(parsed.metric.has_value());
  CHECK(max_abs_diff(*parsed.metric, *pick.metric) == 0.0);
  REQUIRE(parsed.source_nodes.has_value());
  CHECK(parsed.source_nodes->size() == 2);
  CHECK(lsystem_to_json(parsed) == text);
}

TEST_CASE("system round trip without metric or source nodes") {
  auto data = sample_valid_data(41, 3);
  auto pick = build_pick_form(data);
  auto flat = to_euclidean(pick);
  auto text = lsystem_to_json(flat);
  auto parsed = lsystem_from_json(text);
  CHECK_FALSE(parsed.metric.has_value());
  CHECK(lsystem_to_json(parsed) == text);

  auto model = build_model_delta({2.0i, 3.0i});
  auto model_text = lsystem_to_json(model);
  auto model_parsed = lsystem_from_json(model_text);
  CHECK(model_parsed.form == SystemForm::ModelDelta);
  CHECK(lsystem_to_json(model_parsed) == model_text);
}

TEST_CASE("system parsing rejects structural mistakes") {
  CHECK(throws_code(ErrorCode::ParseError, [] { lsystem_from_json("{"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { lsystem_from_json("{}"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    lsystem_from_json(R"({"form":"pick_form","T":[[{"re":0,"im":2}]],"K":[]})");
  }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    lsystem_from_json(
        R"({"form":"nonsense","T":[[{"re":0,"im":2}]],"K":[{"re":1,"im":0}]})");
  }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    lsystem_from_json(
        R"({"form":"model_delta","T":[[{"re":0,"im":2},{"re":0,"im":0}]],)"
        R"("K":[{"re":1,"im":0}]})");
  }));
  CHECK(throws_code(ErrorCode::ParseError, [] {
    lsystem_from_json(
        R"({"form":"pick_form","T":[[{"re":0,"im":2}]],"K":[{"re":1,"im":0}],)"
        R"("metric":[[{"re":1,"im":0}],[{"re":0,"im":0}]]})");
  }, "metric"));
}
