#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "crowd/errors.hpp"
#include "crowd/geo.hpp"
#include "crowd/task.hpp"

namespace crowd {

using Json = nlohmann::json;

// Fixed-length feature vector produced by task resolution. The schema
// (dimension names) is owned by the resolver; agents carry the values plus
// the schema hash so stale vectors are detectable.
struct TaskVector {
  std::vector<double> dims;
  std::uint64_t schema_hash = 0;

  friend bool operator==(const TaskVector&, const TaskVector&) = default;
};

struct TimeRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  friend bool operator==(const TimeRange&, const TimeRange&) = default;
};

struct TaskInfo {
  std::optional<TimeRange> time_range;
  std::optional<GeoPoint> location;
  double radius_m = 0.0;
  TaskVector vector;
  std::string classification;
  std::string topic;
};

// Software-defined task resource. Mutation targets of the correction tables
// (range, reward, u_credit, format, submit_state) live here.
struct TaskAgent {
  Tid task_id = 0;
  TaskPhase process_state = TaskPhase::Creation;
  int prio = 8;  // 0 highest .. 15 lowest
  TaskInfo task_info;
  std::uint64_t device_num = 0;
  std::vector<std::string> device_ids;
  std::string sensing_data;  // data-store cube address
  double range = 0.0;        // operative recruiting radius, meters
  double reward = 0.0;
  std::string format;
  double u_credit = 0.0;  // minimum participant credit filter
  std::map<std::string, bool> submit_state;  // participant -> resubmission pending
  std::string correction_bit;                // pending ON code, empty when idle
};

struct UserAgent {
  std::string user_id;
  std::vector<Tid> published_tasks;
  std::vector<Tid> executed_tasks;
  double credit = 80.0;  // [0, 100]
  std::set<std::string> interests;
  GeoPoint location;
};

struct DeviceAgent {
  std::string device_id;
  std::string device_type;
  double remaining_power = 100.0;
  GeoPoint location;
  double usage = 0.0;
  double storage_occupancy = 0.0;
  bool availability = true;
};

struct AlarmThresholds {
  double cpu = 90.0;
  double storage = 90.0;
};

struct EnvironmentAgent {
  int cpu_count = 1;
  double cpu_util = 0.0;
  double memory_used = 0.0;
  std::uint64_t disk_free = 0;
  std::uint64_t user_volume = 0;
  std::uint64_t device_total = 0;
  AlarmThresholds alarm_thresholds;
};

struct ProcessAgent {
  std::uint64_t tpid = 0;
  Tid task_id = 0;
  TaskPhase process_state = TaskPhase::Creation;
  std::string process_strategy;  // scheduling policy tag
  int process_prio = 8;          // 0 highest .. 15 lowest
  std::string algorithm_flag;    // scheduler selector
  std::uint64_t arrival_time = 0;
  std::uint64_t served_time = 0;
  std::optional<int> saved_prio;  // original prio while a feedback boost holds
};

Json to_json(const TaskAgent& a);
Json to_json(const UserAgent& a);
Json to_json(const DeviceAgent& a);
Json to_json(const EnvironmentAgent& a);
Json to_json(const ProcessAgent& a);

struct DeviceStatusReport {
  std::string device_id;
  std::string device_type;
  std::optional<double> remaining_power;
  std::optional<GeoPoint> location;
  std::optional<double> usage;
  std::optional<double> storage_occupancy;
};

struct EnvSnapshot {
  int cpu_count = 1;
  double cpu_util = 0.0;
  double memory_used = 0.0;
  std::uint64_t disk_free = 0;
  std::uint64_t user_volume = 0;
  std::uint64_t device_total = 0;
};

enum class AlarmKind { Cpu, Storage };

struct Alarm {
  AlarmKind kind;
  double value = 0.0;
  double threshold = 0.0;
};

struct AvailabilityFloors {
  double power_min = 5.0;  // percent
  double usage_max = 95.0;
};

// Per-task typed subgraph feeding strategy selection.
struct TaskResourceGraph {
  enum class EdgeKind { CandidateOf, LocatedNear, OwnsDevice, ConstrainedBy };

  struct Edge {
    EdgeKind kind;
    std::string from;
    std::string to;
  };

  Tid root = 0;
  TaskAgent task;
  ProcessAgent process;
  EnvironmentAgent environment;
  std::vector<UserAgent> candidate_users;
  std::vector<DeviceAgent> candidate_devices;
  std::vector<Edge> edges;
};

enum class MutationAction { Set, Increase, Decrease };

// Field-path mutation as issued by correction operations. Task-agent paths
// resolve through `tid`, User-agent paths through `user_id`.
struct AgentMutation {
  std::string target;  // e.g. "Task-agent.reward"
  MutationAction action = MutationAction::Set;
  double amount = 0.0;
  std::string string_value;  // Set on string-typed fields
  Tid tid = 0;
  std::string user_id;
};

struct MutationRecord {
  AgentMutation mutation;
  double before = 0.0;
  double after = 0.0;
  std::string provenance;  // ON code that triggered it, if any
};

// System Resource Graph: the store of all live agents. Many concurrent
// readers, exclusive writers; exactly one EnvironmentAgent.
class AgentStore {
 public:
  AgentStore() = default;
  explicit AgentStore(AvailabilityFloors floors) : floors_(floors) {}

  // --- task / process agents -------------------------------------------
  void put_task_agent(const TaskAgent& agent);
  TaskAgent task_agent(Tid tid) const;
  bool has_task_agent(Tid tid) const;
  void put_process_agent(const ProcessAgent& agent);
  ProcessAgent process_agent_for(Tid tid) const;
  std::vector<Tid> task_ids() const;

  template <typename Fn>
  void with_task_agent(Tid tid, Fn&& fn) {
    std::unique_lock lock(mutex_);
    auto it = tasks_.find(tid);
    if (it == tasks_.end()) fail(ErrorCode::UnknownTask, std::to_string(tid));
    fn(it->second);
  }

  template <typename Fn>
  void with_process_agent(Tid tid, Fn&& fn) {
    std::unique_lock lock(mutex_);
    auto it = processes_.find(tid);
    if (it == processes_.end()) fail(ErrorCode::UnknownTask, std::to_string(tid));
    fn(it->second);
  }

  // --- users / devices ---------------------------------------------------
  void put_user(const UserAgent& agent);
  UserAgent user(const std::string& user_id) const;
  bool has_user(const std::string& user_id) const;
  std::vector<UserAgent> users() const;

  DeviceAgent register_device(const DeviceStatusReport& status);
  DeviceAgent device(const std::string& device_id) const;
  std::vector<DeviceAgent> devices() const;

  // --- environment ------------------------------------------------------
  void set_environment(const EnvironmentAgent& ea);
  EnvironmentAgent environment() const;
  std::vector<Alarm> update_environment(const EnvSnapshot& snapshot);

  // --- graph + mutations --------------------------------------------------
  TaskResourceGraph build_trg(Tid tid) const;
  MutationRecord apply_agent_mutation(const AgentMutation& mutation,
                                      const std::string& provenance = {});
  const std::vector<MutationRecord>& mutation_log() const { return mutation_log_; }

  // Deterministic full dump for replay-equivalence checks.
  Json dump() const;

  static const std::set<std::string>& mutable_fields();

 private:
  bool derive_availability(const DeviceAgent& d) const;

  mutable std::shared_mutex mutex_;
  AvailabilityFloors floors_;
  std::map<Tid, TaskAgent> tasks_;
  std::map<Tid, ProcessAgent> processes_;
  std::map<std::string, UserAgent> users_;
  std::map<std::string, DeviceAgent> devices_;
  EnvironmentAgent environment_;
  std::vector<MutationRecord> mutation_log_;
};

}  // namespace crowd
