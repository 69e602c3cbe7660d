#include "npls/errors.hpp"

namespace npls {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NodeNotInUpperHalfPlane: return "NodeNotInUpperHalfPlane";
    case ErrorCode::ValueNotInUpperHalfPlane: return "ValueNotInUpperHalfPlane";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::DataTooLarge: return "DataTooLarge";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::PickNotPositive: return "PickNotPositive";
    case ErrorCode::MetricNotPositive: return "MetricNotPositive";
    case ErrorCode::NotDissipative: return "NotDissipative";
    case ErrorCode::MetricMismatch: return "MetricMismatch";
    case ErrorCode::ProbeNotRegular: return "ProbeNotRegular";
    case ErrorCode::GridPointNotRegular: return "GridPointNotRegular";
    case ErrorCode::ModelRequiresValuesI: return "ModelRequiresValuesI";
    case ErrorCode::NotRegularPoint: return "NotRegularPoint";
    case ErrorCode::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorCode::PoleAtI: return "PoleAtI";
    case ErrorCode::PoleAtNode: return "PoleAtNode";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::NodeAtI: return "NodeAtI";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::UnpairedNode: return "UnpairedNode";
    case ErrorCode::EmptyImpedance: return "EmptyImpedance";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

void raise(ErrorCode code, const std::string& detail) {
  std::string message = error_code_name(code);
  if (!detail.empty()) {
    message += ": ";
    message += detail;
  }
  throw Error(code, std::move(message));
}

void raise_indexed(ErrorCode code, std::size_t index_1based,
                   const std::string& detail) {
  std::string message = error_code_name(code);
  message += "(";
  message += std::to_string(index_1based);
  message += ")";
  if (!detail.empty()) {
    message += ": ";
    message += detail;
  }
  throw Error(code, std::move(message));
}

} // namespace npls
