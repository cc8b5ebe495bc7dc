#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crowd/errors.hpp"
#include "crowd/geo.hpp"

namespace crowd {

using Tid = std::uint64_t;

// Seven-phase task lifecycle. Termination is absorbing.
enum class TaskPhase {
  Creation,
  Generation,
  Allocation,
  Execution,
  Processing,
  Feedback,
  Termination,
};

inline constexpr int kPhaseCount = 7;

std::string_view phase_name(TaskPhase phase);
std::optional<TaskPhase> phase_from_name(std::string_view name);

// Phases reachable from Feedback through a correction.
constexpr std::array<TaskPhase, 3> feedback_reachable() {
  return {TaskPhase::Generation, TaskPhase::Allocation, TaskPhase::Processing};
}

constexpr bool is_feedback_reachable(TaskPhase phase) {
  return phase == TaskPhase::Generation || phase == TaskPhase::Allocation ||
         phase == TaskPhase::Processing;
}

struct PhaseEvent {
  enum class Kind { Submit, Analyze, Assign, Upload, Process, Evaluate, Correct };

  Kind kind = Kind::Submit;
  double quality = 0.0;                      // Evaluate only
  TaskPhase target = TaskPhase::Generation;  // Correct only

  static PhaseEvent submit() { return {Kind::Submit}; }
  static PhaseEvent analyze() { return {Kind::Analyze}; }
  static PhaseEvent assign() { return {Kind::Assign}; }
  static PhaseEvent upload() { return {Kind::Upload}; }
  static PhaseEvent process() { return {Kind::Process}; }
  static PhaseEvent evaluate(double q) { return {Kind::Evaluate, q}; }
  static PhaseEvent correct(TaskPhase t) { return {Kind::Correct, 0.0, t}; }
};

// Pure transition function for the lifecycle state machine.
//
// Evaluate compares the carried quality score against delta: qualified
// evaluations close the task, unqualified ones leave it parked in Feedback
// until a Correct event arrives. Correct targets must lie in the
// feedback-reachable set. Anything else is IllegalTransition; events on a
// terminated task are TerminatedTask.
TaskPhase advance_phase(TaskPhase current, const PhaseEvent& event, double delta);

struct TerminationCondition {
  std::optional<std::uint64_t> deadline;  // absolute tick
  std::optional<std::uint64_t> scale;     // result-count threshold, >= 1
  std::optional<std::string> extra;       // named predicate id

  bool has_any() const { return deadline || scale || extra; }
};

struct TaskDescription {
  std::string lang = "en";
  std::string text;
};

// Raw publisher input: free text plus the discrete button/rule selections.
struct RawTaskInput {
  std::string publisher;
  TaskDescription description;
  std::string classification;  // may be empty; extraction can fall back to it
  TerminationCondition termination;
  std::optional<GeoPoint> location;
  double radius_m = 0.0;  // meaningful when location is set
  std::optional<std::uint64_t> participant_count;
  double reward = 0.0;
  std::string format;  // requested result format descriptor
  std::map<std::string, double> discrete_features;
};

struct Participants {
  std::set<std::string> workers;
  std::set<std::string> devices;
};

// The five-element task tuple. Immutable after creation except that the
// kernel coordinator tracks the current phase alongside it.
struct TaskSpec {
  Tid tid = 0;
  std::string publisher;
  Participants participants;
  std::string classification;
  TaskDescription description;
  TerminationCondition termination;
};

// Allocates strictly monotonic task ids and validates raw input.
class TaskFactory {
 public:
  explicit TaskFactory(Tid first_tid = 1) : next_tid_(first_tid) {}

  TaskSpec create_task(const RawTaskInput& raw);

  Tid peek_next() const { return next_tid_; }

 private:
  Tid next_tid_;
};

// True iff any present termination condition is satisfied. Absent conditions
// evaluate false; `extra_true` holds the predicate ids currently true.
bool check_termination(const TaskSpec& spec, std::uint64_t now,
                       std::uint64_t result_count,
                       const std::set<std::string>& extra_true);

}  // namespace crowd
