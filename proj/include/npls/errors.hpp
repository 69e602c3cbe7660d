#pragma once

#include <stdexcept>
#include <string>

namespace npls {

enum class ErrorCode {
  // data validation
  NodeNotInUpperHalfPlane,
  ValueNotInUpperHalfPlane,
  DuplicateNodes,
  LengthMismatch,
  EmptyData,
  DataTooLarge,
  // matrix checks
  NonHermitianInput,
  PickNotPositive,
  MetricNotPositive,
  // realizations
  NotDissipative,
  MetricMismatch,
  ProbeNotRegular,
  GridPointNotRegular,
  ModelRequiresValuesI,
  // function evaluation
  NotRegularPoint,
  PoleAtMinusOne,
  PoleAtI,
  PoleAtNode,
  DenominatorZero,
  PoleHit,
  // invariants
  NodeAtI,
  NotApplicable,
  // synthesis
  UnpairedNode,
  EmptyImpedance,
  // i/o
  ParseError,
};

// Indices reported in messages are 1-based, matching report output.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

[[noreturn]] void raise(ErrorCode code, const std::string& detail);
[[noreturn]] void raise_indexed(ErrorCode code, std::size_t index_1based,
                                const std::string& detail = {});

} // namespace npls
