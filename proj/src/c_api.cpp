#include "npls.h"

#include <cstring>
#include <string>

#include "npls/analytic.hpp"
#include "npls/entropy.hpp"
#include "npls/errors.hpp"
#include "npls/json_io.hpp"
#include "npls/lsystem.hpp"
#include "npls/reports.hpp"

struct npls_data {
  npls::InterpolationData data;
};

struct npls_system {
  npls::LSystem sys;
};

namespace {

thread_local std::string g_last_error = "no error";

npls_status map_code(npls::ErrorCode code) {
  using npls::ErrorCode;
  switch (code) {
    case ErrorCode::NodeNotInUpperHalfPlane:
    case ErrorCode::ValueNotInUpperHalfPlane:
    case ErrorCode::DuplicateNodes:
    case ErrorCode::LengthMismatch:
    case ErrorCode::EmptyData:
    case ErrorCode::DataTooLarge:
    case ErrorCode::NotDissipative:
    case ErrorCode::ModelRequiresValuesI:
    case ErrorCode::NodeAtI:
    case ErrorCode::EmptyImpedance:
      return NPLS_ERR_INVALID_DATA;
    case ErrorCode::PickNotPositive:
      return NPLS_ERR_PICK_NOT_POSITIVE;
    case ErrorCode::UnpairedNode:
      return NPLS_ERR_UNPAIRED_NODE;
    case ErrorCode::NotRegularPoint:
    case ErrorCode::ProbeNotRegular:
    case ErrorCode::GridPointNotRegular:
    case ErrorCode::PoleAtMinusOne:
    case ErrorCode::PoleAtI:
    case ErrorCode::PoleAtNode:
    case ErrorCode::DenominatorZero:
    case ErrorCode::PoleHit:
      return NPLS_ERR_NOT_REGULAR;
    case ErrorCode::ParseError:
      return NPLS_ERR_PARSE;
    case ErrorCode::NotApplicable:
      return NPLS_ERR_NOT_APPLICABLE;
    case ErrorCode::NonHermitianInput:
    case ErrorCode::MetricMismatch:
    case ErrorCode::MetricNotPositive:
      return NPLS_ERR_INVALID_ARGUMENT;
  }
  return NPLS_ERR_INTERNAL;
}

template <typename Fn>
npls_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return NPLS_OK;
  } catch (const npls::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NPLS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NPLS_ERR_INTERNAL;
  }
}

npls_status fail_argument(const char* message) noexcept {
  g_last_error = message;
  return NPLS_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

npls::LSystem build_form(const npls::InterpolationData& data, npls_form form) {
  switch (form) {
    case NPLS_FORM_PICK:
      return npls::build_pick_form(data);
    case NPLS_FORM_MODEL:
      if (!npls::all_values_i(data))
        npls::raise(npls::ErrorCode::ModelRequiresValuesI,
                    "model form requires every value to be i");
      return npls::build_model_delta(data.nodes);
    case NPLS_FORM_COUPLING: {
      // Nodes whose Blaschke product is the data's transfer function: the
      // nodes themselves when all values are i, otherwise the eigenvalues of
      // the Pick-form state operator.
      std::vector<npls::cplx> nodes;
      if (npls::all_values_i(data)) {
        nodes = data.nodes;
      } else {
        nodes = npls::blaschke_nodes(npls::build_pick_form(data));
      }
      npls::LSystem sys = npls::build_multiplication(nodes.at(0));
      for (std::size_t k = 1; k < nodes.size(); ++k)
        sys = npls::couple(sys, npls::build_multiplication(nodes[k]));
      return sys;
    }
  }
  npls::raise(npls::ErrorCode::ParseError, "unknown realization form");
}

} // namespace

extern "C" {

const char* npls_version(void) { return "1.0.0"; }

const char* npls_last_error(void) { return g_last_error.c_str(); }

void npls_string_free(char* text) { delete[] text; }

npls_status npls_data_create(const double* nodes_re, const double* nodes_im,
                             const double* values_re, const double* values_im,
                             size_t count, npls_data** out) {
  if (!out || !nodes_re || !nodes_im)
    return fail_argument("nodes_re, nodes_im, and out must be non-null");
  if ((values_re == nullptr) != (values_im == nullptr))
    return fail_argument("values_re and values_im must be both set or both null");
  *out = nullptr;
  return guarded([&] {
    std::vector<npls::cplx> nodes(count);
    for (size_t k = 0; k < count; ++k) nodes[k] = {nodes_re[k], nodes_im[k]};
    std::optional<std::vector<npls::cplx>> values;
    if (values_re) {
      values.emplace(count);
      for (size_t k = 0; k < count; ++k)
        (*values)[k] = {values_re[k], values_im[k]};
    }
    *out = new npls_data{npls::validate_data(nodes, values)};
  });
}

npls_status npls_data_parse_json(const char* text, npls_data** out) {
  if (!text || !out) return fail_argument("text and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = new npls_data{npls::data_from_json(text)}; });
}

npls_status npls_data_sample(uint64_t seed, size_t m, npls_data** out) {
  if (!out) return fail_argument("out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = new npls_data{npls::sample_valid_data(seed, m)}; });
}

size_t npls_data_size(const npls_data* data) {
  return data ? data->data.nodes.size() : 0;
}

npls_status npls_data_node(const npls_data* data, size_t index, double* re,
                           double* im) {
  if (!data || !re || !im) return fail_argument("data, re, im must be non-null");
  if (index >= data->data.nodes.size()) return fail_argument("index out of range");
  *re = data->data.nodes[index].real();
  *im = data->data.nodes[index].imag();
  return NPLS_OK;
}

npls_status npls_data_value(const npls_data* data, size_t index, double* re,
                            double* im) {
  if (!data || !re || !im) return fail_argument("data, re, im must be non-null");
  if (index >= data->data.values.size()) return fail_argument("index out of range");
  *re = data->data.values[index].real();
  *im = data->data.values[index].imag();
  return NPLS_OK;
}

void npls_data_free(npls_data* data) { delete data; }

npls_status npls_pick_report(const npls_data* data, double tol_pos,
                             double* min_eigenvalue, double* matrix_norm,
                             int* strictly_positive, double* condition) {
  if (!data) return fail_argument("data must be non-null");
  return guarded([&] {
    const npls::PickPair pq = npls::build_pick_matrices(data->data);
    const npls::PositivityReport report = npls::check_positivity(pq.P, tol_pos);
    if (min_eigenvalue) *min_eigenvalue = report.min_eigenvalue;
    if (matrix_norm) *matrix_norm = report.matrix_norm;
    if (strictly_positive) *strictly_positive = report.strictly_positive ? 1 : 0;
    if (condition) *condition = report.condition_estimate;
  });
}

npls_status npls_system_build(const npls_data* data, npls_form form,
                              npls_system** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = new npls_system{build_form(data->data, form)}; });
}

npls_status npls_system_parse_json(const char* text, npls_system** out) {
  if (!text || !out) return fail_argument("text and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = new npls_system{npls::lsystem_from_json(text)}; });
}

npls_status npls_system_to_json(const npls_system* sys, char** out) {
  if (!sys || !out) return fail_argument("sys and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = copy_string(npls::lsystem_to_json(sys->sys)); });
}

size_t npls_system_dim(const npls_system* sys) {
  return sys ? static_cast<size_t>(sys->sys.dim()) : 0;
}

npls_status npls_system_transfer(const npls_system* sys, double z_re,
                                 double z_im, double* w_re, double* w_im) {
  if (!sys || !w_re || !w_im) return fail_argument("sys, w_re, w_im must be non-null");
  return guarded([&] {
    const npls::cplx w = npls::transfer(sys->sys, {z_re, z_im});
    *w_re = w.real();
    *w_im = w.imag();
  });
}

npls_status npls_system_impedance(const npls_system* sys, double z_re,
                                  double z_im, double* v_re, double* v_im) {
  if (!sys || !v_re || !v_im) return fail_argument("sys, v_re, v_im must be non-null");
  return guarded([&] {
    const npls::cplx v = npls::impedance(sys->sys, {z_re, z_im});
    *v_re = v.real();
    *v_im = v.imag();
  });
}

npls_status npls_system_entropy(const npls_system* sys, int* finite,
                                double* value) {
  if (!sys || !finite || !value)
    return fail_argument("sys, finite, value must be non-null");
  return guarded([&] {
    const npls::EntropyValue s = npls::entropy_from_system(sys->sys);
    *finite = s.finite ? 1 : 0;
    *value = s.finite ? s.value : 0.0;
  });
}

npls_status npls_system_dissipation(const npls_system* sys, double* value) {
  if (!sys || !value) return fail_argument("sys and value must be non-null");
  return guarded([&] {
    *value = npls::dissipation_from_entropy(npls::entropy_from_system(sys->sys));
  });
}

npls_status npls_system_kappa(const npls_system* sys, double* value) {
  if (!sys || !value) return fail_argument("sys and value must be non-null");
  return guarded([&] { *value = npls::compute_kappa(sys->sys); });
}

void npls_system_free(npls_system* sys) { delete sys; }

npls_status npls_analyze_json(const npls_data* data, double tol_pos,
                              double tol_node, char** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(npls::analyze_report(data->data, tol_pos, tol_node));
  });
}

npls_status npls_verify_json(const npls_data* data, char** out,
                             int* all_passed) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    const npls::VerifyOutcome outcome = npls::verify_report(data->data);
    *out = copy_string(outcome.json);
    if (all_passed) *all_passed = outcome.all_passed ? 1 : 0;
  });
}

npls_status npls_regimes_json(const npls_data* data, double tol_node,
                              char** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(npls::regimes_report(data->data, tol_node));
  });
}

npls_status npls_realize_json(const npls_data* data, npls_form form,
                              char** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(npls::lsystem_to_json(build_form(data->data, form)));
  });
}

npls_status npls_eval_csv(const npls_system* sys, char func, double re0,
                          double re1, double im0, double im1, size_t steps,
                          char** out) {
  if (!sys || !out) return fail_argument("sys and out must be non-null");
  if (func != 'W' && func != 'V') return fail_argument("func must be 'W' or 'V'");
  if (steps == 0) return fail_argument("steps must be positive");
  *out = nullptr;
  return guarded([&] {
    npls::EvalGrid grid{re0, re1, im0, im1, steps};
    *out = copy_string(npls::eval_csv(sys->sys, func, grid));
  });
}

npls_status npls_synth_netlist(const npls_data* data, char** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = copy_string(npls::synth_netlist(data->data)); });
}

npls_status npls_synth_bode_csv(const npls_data* data, char** out) {
  if (!data || !out) return fail_argument("data and out must be non-null");
  *out = nullptr;
  return guarded([&] { *out = copy_string(npls::bode_csv(data->data)); });
}

} // extern "C"
