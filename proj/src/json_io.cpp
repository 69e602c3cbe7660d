#include "npls/json_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "npls/errors.hpp"

namespace npls {

namespace {

using nlohmann::json;

// 17 significant digits round-trip a double exactly.
std::string fmt17(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void append_complex(std::string& out, const cplx& z) {
  out += "{\"re\":";
  out += fmt17(z.real());
  out += ",\"im\":";
  out += fmt17(z.imag());
  out += "}";
}

void append_complex_list(std::string& out, const Eigen::VectorXcd& v) {
  out += "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k > 0) out += ",";
    append_complex(out, v(k));
  }
  out += "]";
}

void append_complex_matrix(std::string& out, const Eigen::MatrixXcd& M) {
  out += "[";
  for (Eigen::Index j = 0; j < M.rows(); ++j) {
    if (j > 0) out += ",";
    out += "[";
    for (Eigen::Index k = 0; k < M.cols(); ++k) {
      if (k > 0) out += ",";
      append_complex(out, M(j, k));
    }
    out += "]";
  }
  out += "]";
}

cplx complex_from(const json& node) {
  if (!node.is_object() || !node.contains("re") || !node.contains("im") ||
      !node["re"].is_number() || !node["im"].is_number())
    raise(ErrorCode::ParseError, "expected {\"re\":number,\"im\":number}");
  return {node["re"].get<double>(), node["im"].get<double>()};
}

std::vector<cplx> complex_list_from(const json& node, const char* what) {
  if (!node.is_array())
    raise(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<cplx> out;
  out.reserve(node.size());
  for (const json& item : node) out.push_back(complex_from(item));
  return out;
}

Eigen::MatrixXcd matrix_from(const json& node, const char* what) {
  if (!node.is_array() || node.empty())
    raise(ErrorCode::ParseError, std::string(what) + " must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(node.size());
  Eigen::MatrixXcd M;
  for (Eigen::Index j = 0; j < rows; ++j) {
    const json& row = node[static_cast<std::size_t>(j)];
    if (!row.is_array())
      raise(ErrorCode::ParseError, std::string(what) + " rows must be arrays");
    if (j == 0) M.resize(rows, static_cast<Eigen::Index>(row.size()));
    if (static_cast<Eigen::Index>(row.size()) != M.cols())
      raise(ErrorCode::ParseError, std::string(what) + " rows have unequal lengths");
    for (Eigen::Index k = 0; k < M.cols(); ++k)
      M(j, k) = complex_from(row[static_cast<std::size_t>(k)]);
  }
  return M;
}

json parse_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    raise(ErrorCode::ParseError, "malformed JSON");
  return parsed;
}

} // namespace

InterpolationData data_from_json(const std::string& text) {
  const json parsed = parse_text(text);
  if (!parsed.is_object() || !parsed.contains("nodes"))
    raise(ErrorCode::ParseError, "expected an object with a \"nodes\" array");
  const std::vector<cplx> nodes = complex_list_from(parsed["nodes"], "nodes");
  std::optional<std::vector<cplx>> values;
  if (parsed.contains("values") && !parsed["values"].is_null())
    values = complex_list_from(parsed["values"], "values");
  return validate_data(nodes, values);
}

std::string data_to_json(const InterpolationData& data) {
  std::string out = "{\"nodes\":[";
  for (std::size_t k = 0; k < data.nodes.size(); ++k) {
    if (k > 0) out += ",";
    append_complex(out, data.nodes[k]);
  }
  out += "],\"values\":[";
  for (std::size_t k = 0; k < data.values.size(); ++k) {
    if (k > 0) out += ",";
    append_complex(out, data.values[k]);
  }
  out += "]}";
  return out;
}

std::string lsystem_to_json(const LSystem& sys) {
  std::string out = "{\"form\":\"";
  out += form_name(sys.form);
  out += "\",\"T\":";
  append_complex_matrix(out, sys.T);
  out += ",\"K\":";
  append_complex_list(out, sys.g);
  out += ",\"metric\":";
  if (sys.metric) {
    append_complex_matrix(out, *sys.metric);
  } else {
    out += "null";
  }
  out += ",\"source_nodes\":";
  if (sys.source_nodes) {
    out += "[";
    for (std::size_t k = 0; k < sys.source_nodes->size(); ++k) {
      if (k > 0) out += ",";
      append_complex(out, (*sys.source_nodes)[k]);
    }
    out += "]";
  } else {
    out += "null";
  }
  out += "}";
  return out;
}

LSystem lsystem_from_json(const std::string& text) {
  const json parsed = parse_text(text);
  if (!parsed.is_object())
    raise(ErrorCode::ParseError, "expected a JSON object");
  for (const char* key : {"form", "T", "K"})
    if (!parsed.contains(key))
      raise(ErrorCode::ParseError, std::string("missing \"") + key + "\"");

  LSystem sys;
  if (!parsed["form"].is_string())
    raise(ErrorCode::ParseError, "\"form\" must be a string");
  const auto form = form_from_name(parsed["form"].get<std::string>());
  if (!form)
    raise(ErrorCode::ParseError,
          "unknown form \"" + parsed["form"].get<std::string>() + "\"");
  sys.form = *form;

  sys.T = matrix_from(parsed["T"], "T");
  if (sys.T.rows() != sys.T.cols())
    raise(ErrorCode::ParseError, "T must be square");

  const std::vector<cplx> channel = complex_list_from(parsed["K"], "K");
  if (static_cast<Eigen::Index>(channel.size()) != sys.T.rows())
    raise(ErrorCode::ParseError, "K length must match the order of T");
  sys.g.resize(sys.T.rows());
  for (Eigen::Index k = 0; k < sys.g.size(); ++k)
    sys.g(k) = channel[static_cast<std::size_t>(k)];

  if (parsed.contains("metric") && !parsed["metric"].is_null()) {
    Eigen::MatrixXcd metric = matrix_from(parsed["metric"], "metric");
    if (metric.rows() != sys.T.rows() || metric.cols() != sys.T.cols())
      raise(ErrorCode::ParseError, "metric must match the order of T");
    sys.metric = std::move(metric);
  }
  if (parsed.contains("source_nodes") && !parsed["source_nodes"].is_null())
    sys.source_nodes = complex_list_from(parsed["source_nodes"], "source_nodes");
  return sys;
}

} // namespace npls
