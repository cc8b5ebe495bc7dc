#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>

#include "crowd/agents.hpp"
#include "crowd/errors.hpp"

namespace crowd {

enum class SchedulingPolicy { Fcfs, RoundRobin, Priority, Hrrn, FeedbackPriority };

std::string_view policy_name(SchedulingPolicy p);
std::optional<SchedulingPolicy> policy_from_name(std::string_view name);

// Which way "raise the priority level from n to n+2" moves the number.
// RaiseUrgency subtracts 2 (0 is the highest priority); LiteralPlusTwo adds.
enum class BoostDirection { RaiseUrgency, LiteralPlusTwo };

// R = (w + s) / s.
double response_ratio(double waited, double service);

// Applies the feedback boost to a process in the Feedback state, retaining
// the original priority for restore on phase exit.
ProcessAgent boost_feedback(const ProcessAgent& pa,
                            BoostDirection direction = BoostDirection::RaiseUrgency);
ProcessAgent restore_feedback_boost(const ProcessAgent& pa);

struct QueueEntry {
  std::uint64_t tpid = 0;
  std::uint64_t arrival_time = 0;
  double expected_service = 1.0;  // > 0 for HRRN
  int prio = 8;
  TaskPhase state = TaskPhase::Creation;
  std::uint64_t seqno = 0;  // insertion order, FIFO tie-break
};

// Ready queue over task processes. next() is the single dequeue point;
// multiple producers may enqueue.
class ReadyQueue {
 public:
  explicit ReadyQueue(SchedulingPolicy policy = SchedulingPolicy::Fcfs,
                      std::uint64_t quantum = 1,
                      BoostDirection boost = BoostDirection::RaiseUrgency)
      : policy_(policy), quantum_(quantum), boost_(boost) {}

  void enqueue(QueueEntry entry);
  QueueEntry next(std::uint64_t now);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  SchedulingPolicy policy() const { return policy_; }
  std::uint64_t quantum() const { return quantum_; }

 private:
  int effective_prio(const QueueEntry& e) const;

  SchedulingPolicy policy_;
  std::uint64_t quantum_;
  BoostDirection boost_;
  std::uint64_t next_seqno_ = 0;
  std::deque<QueueEntry> entries_;
};

}  // namespace crowd
