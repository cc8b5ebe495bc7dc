#include "crowd/task.hpp"

namespace crowd {

std::string_view phase_name(TaskPhase phase) {
  switch (phase) {
    case TaskPhase::Creation: return "Creation";
    case TaskPhase::Generation: return "Generation";
    case TaskPhase::Allocation: return "Allocation";
    case TaskPhase::Execution: return "Execution";
    case TaskPhase::Processing: return "Processing";
    case TaskPhase::Feedback: return "Feedback";
    case TaskPhase::Termination: return "Termination";
  }
  return "Unknown";
}

std::optional<TaskPhase> phase_from_name(std::string_view name) {
  static const std::array<TaskPhase, kPhaseCount> all = {
      TaskPhase::Creation,   TaskPhase::Generation, TaskPhase::Allocation,
      TaskPhase::Execution,  TaskPhase::Processing, TaskPhase::Feedback,
      TaskPhase::Termination};
  for (TaskPhase p : all) {
    if (phase_name(p) == name) return p;
  }
  return std::nullopt;
}

TaskPhase advance_phase(TaskPhase current, const PhaseEvent& event, double delta) {
  if (current == TaskPhase::Termination) {
    fail(ErrorCode::TerminatedTask, "no event advances a terminated task");
  }

  using K = PhaseEvent::Kind;
  switch (current) {
    case TaskPhase::Creation:
      if (event.kind == K::Submit) return TaskPhase::Generation;
      break;
    case TaskPhase::Generation:
      if (event.kind == K::Analyze) return TaskPhase::Allocation;
      break;
    case TaskPhase::Allocation:
      if (event.kind == K::Assign) return TaskPhase::Execution;
      break;
    case TaskPhase::Execution:
      if (event.kind == K::Upload) return TaskPhase::Processing;
      break;
    case TaskPhase::Processing:
      if (event.kind == K::Process) return TaskPhase::Feedback;
      break;
    case TaskPhase::Feedback:
      if (event.kind == K::Evaluate) {
        // Qualified result closes the task; otherwise stay parked in
        // Feedback until a Correct event names a return phase.
        return event.quality >= delta ? TaskPhase::Termination
                                      : TaskPhase::Feedback;
      }
      if (event.kind == K::Correct) {
        if (!is_feedback_reachable(event.target)) {
          fail(ErrorCode::IllegalTransition,
               std::string("correction target ") +
                   std::string(phase_name(event.target)) +
                   " is not feedback-reachable");
        }
        return event.target;
      }
      break;
    case TaskPhase::Termination:
      break;  // handled above
  }
  fail(ErrorCode::IllegalTransition,
       std::string("no edge from ") + std::string(phase_name(current)));
}

TaskSpec TaskFactory::create_task(const RawTaskInput& raw) {
  if (raw.description.text.empty()) {
    fail(ErrorCode::EmptyDescription, "task description text is empty");
  }
  if (!raw.termination.has_any()) {
    fail(ErrorCode::NoTerminationCondition,
         "at least one of deadline/scale/extra is required");
  }
  if (raw.termination.scale && *raw.termination.scale < 1) {
    fail(ErrorCode::NoTerminationCondition, "scale must be >= 1");
  }

  TaskSpec spec;
  spec.tid = next_tid_++;
  spec.publisher = raw.publisher;
  spec.classification = raw.classification;
  spec.description = raw.description;
  spec.termination = raw.termination;
  return spec;
}

bool check_termination(const TaskSpec& spec, std::uint64_t now,
                       std::uint64_t result_count,
                       const std::set<std::string>& extra_true) {
  const TerminationCondition& tc = spec.termination;
  if (tc.deadline && now > *tc.deadline) return true;
  if (tc.scale && result_count >= *tc.scale) return true;
  if (tc.extra && extra_true.count(*tc.extra) > 0) return true;
  return false;
}

}  // namespace crowd
