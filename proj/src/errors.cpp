#include "crowd/errors.hpp"

namespace crowd {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDescription: return "EmptyDescription";
    case ErrorCode::NoTerminationCondition: return "NoTerminationCondition";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::TerminatedTask: return "TerminatedTask";
    case ErrorCode::MalformedStatus: return "MalformedStatus";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NoTopicFound: return "NoTopicFound";
    case ErrorCode::EmptyLibrary: return "EmptyLibrary";
    case ErrorCode::InsufficientParticipants: return "InsufficientParticipants";
    case ErrorCode::UnknownStrategy: return "UnknownStrategy";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyQueue: return "EmptyQueue";
    case ErrorCode::NonPositiveService: return "NonPositiveService";
    case ErrorCode::NotInFeedback: return "NotInFeedback";
    case ErrorCode::NonPositiveUpsilon: return "NonPositiveUpsilon";
    case ErrorCode::WeightSumViolation: return "WeightSumViolation";
    case ErrorCode::UnknownShallowCause: return "UnknownShallowCause";
    case ErrorCode::UnmappedReason: return "UnmappedReason";
    case ErrorCode::UnknownOperation: return "UnknownOperation";
    case ErrorCode::MaxRoundsExceeded: return "MaxRoundsExceeded";
    case ErrorCode::ParentNotFound: return "ParentNotFound";
    case ErrorCode::ProtectedNode: return "ProtectedNode";
    case ErrorCode::MalformedRange: return "MalformedRange";
    case ErrorCode::NotAssignee: return "NotAssignee";
    case ErrorCode::NotPublisher: return "NotPublisher";
    case ErrorCode::WrongPhase: return "WrongPhase";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::ScenarioInvalid: return "ScenarioInvalid";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::LoopInFlight: return "LoopInFlight";
  }
  return "UnknownError";
}

}  // namespace crowd
