#include "crowd/scheduler.hpp"

#include <algorithm>

namespace crowd {

std::string_view policy_name(SchedulingPolicy p) {
  switch (p) {
    case SchedulingPolicy::Fcfs: return "fcfs";
    case SchedulingPolicy::RoundRobin: return "round-robin";
    case SchedulingPolicy::Priority: return "priority";
    case SchedulingPolicy::Hrrn: return "hrrn";
    case SchedulingPolicy::FeedbackPriority: return "feedback-priority";
  }
  return "fcfs";
}

std::optional<SchedulingPolicy> policy_from_name(std::string_view name) {
  if (name == "fcfs") return SchedulingPolicy::Fcfs;
  if (name == "round-robin") return SchedulingPolicy::RoundRobin;
  if (name == "priority") return SchedulingPolicy::Priority;
  if (name == "hrrn") return SchedulingPolicy::Hrrn;
  if (name == "feedback-priority") return SchedulingPolicy::FeedbackPriority;
  return std::nullopt;
}

double response_ratio(double waited, double service) {
  if (service <= 0.0) fail(ErrorCode::NonPositiveService);
  return (waited + service) / service;
}

ProcessAgent boost_feedback(const ProcessAgent& pa, BoostDirection direction) {
  if (pa.process_state != TaskPhase::Feedback) {
    fail(ErrorCode::NotInFeedback, "tpid " + std::to_string(pa.tpid));
  }
  ProcessAgent boosted = pa;
  if (!boosted.saved_prio) boosted.saved_prio = pa.process_prio;
  int next = direction == BoostDirection::RaiseUrgency ? pa.process_prio - 2
                                                       : pa.process_prio + 2;
  boosted.process_prio = std::clamp(next, 0, 15);
  return boosted;
}

ProcessAgent restore_feedback_boost(const ProcessAgent& pa) {
  ProcessAgent restored = pa;
  if (restored.saved_prio) {
    restored.process_prio = *restored.saved_prio;
    restored.saved_prio.reset();
  }
  return restored;
}

void ReadyQueue::enqueue(QueueEntry entry) {
  entry.seqno = next_seqno_++;
  entries_.push_back(entry);
}

int ReadyQueue::effective_prio(const QueueEntry& e) const {
  if (policy_ == SchedulingPolicy::FeedbackPriority &&
      e.state == TaskPhase::Feedback) {
    int next = boost_ == BoostDirection::RaiseUrgency ? e.prio - 2 : e.prio + 2;
    return std::clamp(next, 0, 15);
  }
  return e.prio;
}

QueueEntry ReadyQueue::next(std::uint64_t now) {
  if (entries_.empty()) fail(ErrorCode::EmptyQueue);

  auto pick = entries_.begin();
  switch (policy_) {
    case SchedulingPolicy::Fcfs:
      pick = std::min_element(entries_.begin(), entries_.end(),
                              [](const QueueEntry& a, const QueueEntry& b) {
                                if (a.arrival_time != b.arrival_time)
                                  return a.arrival_time < b.arrival_time;
                                return a.seqno < b.seqno;
                              });
      break;
    case SchedulingPolicy::RoundRobin:
      // Head of rotation; the caller re-enqueues after its quantum.
      pick = entries_.begin();
      break;
    case SchedulingPolicy::Priority:
    case SchedulingPolicy::FeedbackPriority:
      pick = std::min_element(entries_.begin(), entries_.end(),
                              [this](const QueueEntry& a, const QueueEntry& b) {
                                int pa = effective_prio(a);
                                int pb = effective_prio(b);
                                if (pa != pb) return pa < pb;
                                return a.seqno < b.seqno;
                              });
      break;
    case SchedulingPolicy::Hrrn:
      pick = std::min_element(
          entries_.begin(), entries_.end(),
          [now](const QueueEntry& a, const QueueEntry& b) {
            double wa = now >= a.arrival_time
                            ? static_cast<double>(now - a.arrival_time)
                            : 0.0;
            double wb = now >= b.arrival_time
                            ? static_cast<double>(now - b.arrival_time)
                            : 0.0;
            double ra = response_ratio(wa, a.expected_service);
            double rb = response_ratio(wb, b.expected_service);
            if (ra != rb) return ra > rb;  // max R wins
            return a.seqno < b.seqno;
          });
      break;
  }

  QueueEntry chosen = *pick;
  entries_.erase(pick);
  return chosen;
}

}  // namespace crowd
