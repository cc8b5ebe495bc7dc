#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crowd {

// Error codes shared between the in-process API and the wire protocol.
// Every thrown KernelError maps 1:1 to an Error message {code, detail}.
enum class ErrorCode {
  EmptyDescription,
  NoTerminationCondition,
  IllegalTransition,
  TerminatedTask,
  MalformedStatus,
  UnknownTask,
  UnknownField,
  OutOfDomain,
  NoTopicFound,
  EmptyLibrary,
  InsufficientParticipants,
  UnknownStrategy,
  DuplicateId,
  EmptyQueue,
  NonPositiveService,
  NotInFeedback,
  NonPositiveUpsilon,
  WeightSumViolation,
  UnknownShallowCause,
  UnmappedReason,
  UnknownOperation,
  MaxRoundsExceeded,
  ParentNotFound,
  ProtectedNode,
  MalformedRange,
  NotAssignee,
  NotPublisher,
  WrongPhase,
  Malformed,
  ParseError,
  ValidationError,
  ScenarioInvalid,
  IoFailure,
  LoopInFlight,
};

std::string_view error_code_name(ErrorCode code);

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string detail = {}) {
  throw KernelError(code, std::move(detail));
}

}  // namespace crowd
