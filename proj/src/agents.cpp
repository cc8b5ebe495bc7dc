#include "crowd/agents.hpp"

#include <algorithm>

namespace crowd {

namespace {

Json point_json(const GeoPoint& p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json optional_point_json(const std::optional<GeoPoint>& p) {
  if (!p) return nullptr;
  return point_json(*p);
}

double clamp(double v, double lo, double hi) {
  return std::max(lo, std::min(hi, v));
}

}  // namespace

Json to_json(const TaskAgent& a) {
  Json info{{"time_range", a.task_info.time_range
                               ? Json{{"begin", a.task_info.time_range->begin},
                                      {"end", a.task_info.time_range->end}}
                               : Json(nullptr)},
            {"location", optional_point_json(a.task_info.location)},
            {"radius_m", a.task_info.radius_m},
            {"vector", a.task_info.vector.dims},
            {"schema_hash", a.task_info.vector.schema_hash},
            {"classification", a.task_info.classification},
            {"topic", a.task_info.topic}};
  return Json{{"task_id", a.task_id},
              {"process_state", phase_name(a.process_state)},
              {"prio", a.prio},
              {"task_info", std::move(info)},
              {"device_num", a.device_num},
              {"device_ids", a.device_ids},
              {"sensing_data", a.sensing_data},
              {"range", a.range},
              {"reward", a.reward},
              {"format", a.format},
              {"u_credit", a.u_credit},
              {"submit_state", a.submit_state},
              {"correction_bit", a.correction_bit}};
}

Json to_json(const UserAgent& a) {
  return Json{{"user_id", a.user_id},
              {"published_tasks", a.published_tasks},
              {"executed_tasks", a.executed_tasks},
              {"credit", a.credit},
              {"interests", a.interests},
              {"location", point_json(a.location)}};
}

Json to_json(const DeviceAgent& a) {
  return Json{{"device_id", a.device_id},
              {"device_type", a.device_type},
              {"remaining_power", a.remaining_power},
              {"location", point_json(a.location)},
              {"usage", a.usage},
              {"storage_occupancy", a.storage_occupancy},
              {"availability", a.availability}};
}

Json to_json(const EnvironmentAgent& a) {
  return Json{{"cpu_count", a.cpu_count},
              {"cpu_util", a.cpu_util},
              {"memory_used", a.memory_used},
              {"disk_free", a.disk_free},
              {"user_volume", a.user_volume},
              {"device_total", a.device_total},
              {"alarm_thresholds",
               Json{{"cpu", a.alarm_thresholds.cpu},
                    {"storage", a.alarm_thresholds.storage}}}};
}

Json to_json(const ProcessAgent& a) {
  return Json{{"tpid", a.tpid},
              {"task_id", a.task_id},
              {"process_state", phase_name(a.process_state)},
              {"process_strategy", a.process_strategy},
              {"process_prio", a.process_prio},
              {"algorithm_flag", a.algorithm_flag},
              {"arrival_time", a.arrival_time},
              {"served_time", a.served_time}};
}

void AgentStore::put_task_agent(const TaskAgent& agent) {
  std::unique_lock lock(mutex_);
  tasks_[agent.task_id] = agent;
}

TaskAgent AgentStore::task_agent(Tid tid) const {
  std::shared_lock lock(mutex_);
  auto it = tasks_.find(tid);
  if (it == tasks_.end()) fail(ErrorCode::UnknownTask, std::to_string(tid));
  return it->second;
}

bool AgentStore::has_task_agent(Tid tid) const {
  std::shared_lock lock(mutex_);
  return tasks_.count(tid) > 0;
}

void AgentStore::put_process_agent(const ProcessAgent& agent) {
  std::unique_lock lock(mutex_);
  processes_[agent.task_id] = agent;
}

ProcessAgent AgentStore::process_agent_for(Tid tid) const {
  std::shared_lock lock(mutex_);
  auto it = processes_.find(tid);
  if (it == processes_.end()) fail(ErrorCode::UnknownTask, std::to_string(tid));
  return it->second;
}

std::vector<Tid> AgentStore::task_ids() const {
  std::shared_lock lock(mutex_);
  std::vector<Tid> ids;
  ids.reserve(tasks_.size());
  for (const auto& [tid, _] : tasks_) ids.push_back(tid);
  return ids;
}

void AgentStore::put_user(const UserAgent& agent) {
  std::unique_lock lock(mutex_);
  users_[agent.user_id] = agent;
}

UserAgent AgentStore::user(const std::string& user_id) const {
  std::shared_lock lock(mutex_);
  auto it = users_.find(user_id);
  if (it == users_.end()) fail(ErrorCode::UnknownField, "user " + user_id);
  return it->second;
}

bool AgentStore::has_user(const std::string& user_id) const {
  std::shared_lock lock(mutex_);
  return users_.count(user_id) > 0;
}

std::vector<UserAgent> AgentStore::users() const {
  std::shared_lock lock(mutex_);
  std::vector<UserAgent> out;
  out.reserve(users_.size());
  for (const auto& [_, u] : users_) out.push_back(u);
  return out;
}

bool AgentStore::derive_availability(const DeviceAgent& d) const {
  return d.remaining_power >= floors_.power_min && d.usage <= floors_.usage_max;
}

DeviceAgent AgentStore::register_device(const DeviceStatusReport& status) {
  if (status.device_id.empty()) {
    fail(ErrorCode::MalformedStatus, "missing device_id");
  }
  if (!status.remaining_power || !status.usage || !status.storage_occupancy ||
      !status.location) {
    fail(ErrorCode::MalformedStatus,
         "status report for " + status.device_id + " is missing fields");
  }
  DeviceAgent agent;
  agent.device_id = status.device_id;
  agent.device_type = status.device_type;
  agent.remaining_power = clamp(*status.remaining_power, 0.0, 100.0);
  agent.location = *status.location;
  agent.usage = clamp(*status.usage, 0.0, 100.0);
  agent.storage_occupancy = clamp(*status.storage_occupancy, 0.0, 100.0);
  agent.availability = derive_availability(agent);

  std::unique_lock lock(mutex_);
  devices_[agent.device_id] = agent;
  return agent;
}

DeviceAgent AgentStore::device(const std::string& device_id) const {
  std::shared_lock lock(mutex_);
  auto it = devices_.find(device_id);
  if (it == devices_.end()) fail(ErrorCode::UnknownField, "device " + device_id);
  return it->second;
}

std::vector<DeviceAgent> AgentStore::devices() const {
  std::shared_lock lock(mutex_);
  std::vector<DeviceAgent> out;
  out.reserve(devices_.size());
  for (const auto& [_, d] : devices_) out.push_back(d);
  return out;
}

void AgentStore::set_environment(const EnvironmentAgent& ea) {
  std::unique_lock lock(mutex_);
  environment_ = ea;
}

EnvironmentAgent AgentStore::environment() const {
  std::shared_lock lock(mutex_);
  return environment_;
}

std::vector<Alarm> AgentStore::update_environment(const EnvSnapshot& snapshot) {
  std::unique_lock lock(mutex_);
  environment_.cpu_count = snapshot.cpu_count;
  environment_.cpu_util = snapshot.cpu_util;
  environment_.memory_used = snapshot.memory_used;
  environment_.disk_free = snapshot.disk_free;
  environment_.user_volume = snapshot.user_volume;
  environment_.device_total = snapshot.device_total;

  std::vector<Alarm> alarms;
  if (environment_.cpu_util >= environment_.alarm_thresholds.cpu) {
    alarms.push_back(
        {AlarmKind::Cpu, environment_.cpu_util, environment_.alarm_thresholds.cpu});
  }
  if (environment_.memory_used >= environment_.alarm_thresholds.storage) {
    alarms.push_back({AlarmKind::Storage, environment_.memory_used,
                      environment_.alarm_thresholds.storage});
  }
  return alarms;
}

TaskResourceGraph AgentStore::build_trg(Tid tid) const {
  std::shared_lock lock(mutex_);
  auto task_it = tasks_.find(tid);
  auto proc_it = processes_.find(tid);
  if (task_it == tasks_.end() || proc_it == processes_.end()) {
    fail(ErrorCode::UnknownTask, std::to_string(tid));
  }

  TaskResourceGraph trg;
  trg.root = tid;
  trg.task = task_it->second;
  trg.process = proc_it->second;
  trg.environment = environment_;

  const std::string task_node = "task:" + std::to_string(tid);
  const bool geo_bound = trg.task.task_info.location.has_value();
  const GeoPoint center =
      geo_bound ? *trg.task.task_info.location : GeoPoint{};

  for (const auto& [uid, user] : users_) {
    bool near = geo_bound && distance_m(user.location, center) <= trg.task.range;
    if (geo_bound && !near) continue;
    trg.candidate_users.push_back(user);
    trg.edges.push_back({TaskResourceGraph::EdgeKind::CandidateOf,
                         "user:" + uid, task_node});
    if (near) {
      trg.edges.push_back({TaskResourceGraph::EdgeKind::LocatedNear,
                           "user:" + uid, task_node});
    }
  }
  for (const auto& [did, dev] : devices_) {
    if (!dev.availability) continue;
    if (geo_bound && distance_m(dev.location, center) > trg.task.range) continue;
    trg.candidate_devices.push_back(dev);
    trg.edges.push_back({TaskResourceGraph::EdgeKind::CandidateOf,
                         "device:" + did, task_node});
  }
  for (const auto& did : trg.task.device_ids) {
    trg.edges.push_back(
        {TaskResourceGraph::EdgeKind::OwnsDevice, task_node, "device:" + did});
  }
  trg.edges.push_back(
      {TaskResourceGraph::EdgeKind::ConstrainedBy, task_node, "environment"});
  trg.edges.push_back({TaskResourceGraph::EdgeKind::ConstrainedBy,
                       "process:" + std::to_string(trg.process.tpid),
                       "environment"});
  return trg;
}

const std::set<std::string>& AgentStore::mutable_fields() {
  static const std::set<std::string> fields = {
      "Task-agent.range",     "Task-agent.reward",       "Task-agent.u-credit",
      "Task-agent.format",    "Task-agent.submit-state", "Task-agent.prio",
      "User-agent.credit",
  };
  return fields;
}

MutationRecord AgentStore::apply_agent_mutation(const AgentMutation& mutation,
                                                const std::string& provenance) {
  if (mutable_fields().count(mutation.target) == 0) {
    fail(ErrorCode::UnknownField, mutation.target);
  }

  auto apply_numeric = [&](double current, double lo, double hi) {
    double next = current;
    switch (mutation.action) {
      case MutationAction::Set: next = mutation.amount; break;
      case MutationAction::Increase: next = current + mutation.amount; break;
      case MutationAction::Decrease: next = current - mutation.amount; break;
    }
    // A pre-clamp value that inverts the sign of a non-negative field is a
    // domain error rather than a silent clamp to zero.
    if (lo == 0.0 && mutation.action == MutationAction::Set && next < 0.0) {
      fail(ErrorCode::OutOfDomain, mutation.target);
    }
    return clamp(next, lo, hi);
  };

  std::unique_lock lock(mutex_);
  MutationRecord record{mutation, 0.0, 0.0, provenance};

  if (mutation.target.rfind("Task-agent.", 0) == 0) {
    auto it = tasks_.find(mutation.tid);
    if (it == tasks_.end()) fail(ErrorCode::UnknownTask, std::to_string(mutation.tid));
    TaskAgent& agent = it->second;
    if (mutation.target == "Task-agent.range") {
      record.before = agent.range;
      agent.range = std::max(1.0, apply_numeric(agent.range, 0.0, 1e9));
      record.after = agent.range;
    } else if (mutation.target == "Task-agent.reward") {
      record.before = agent.reward;
      agent.reward = apply_numeric(agent.reward, 0.0, 1e12);
      record.after = agent.reward;
    } else if (mutation.target == "Task-agent.u-credit") {
      record.before = agent.u_credit;
      agent.u_credit = apply_numeric(agent.u_credit, 0.0, 100.0);
      record.after = agent.u_credit;
    } else if (mutation.target == "Task-agent.prio") {
      record.before = agent.prio;
      agent.prio = static_cast<int>(apply_numeric(agent.prio, 0.0, 15.0));
      record.after = agent.prio;
    } else if (mutation.target == "Task-agent.format") {
      agent.format = mutation.string_value;
    } else if (mutation.target == "Task-agent.submit-state") {
      // Flag every current participant for resubmission.
      for (auto& [_, pending] : agent.submit_state) pending = true;
      record.after = static_cast<double>(agent.submit_state.size());
    }
  } else if (mutation.target == "User-agent.credit") {
    auto it = users_.find(mutation.user_id);
    if (it == users_.end()) {
      fail(ErrorCode::UnknownField, "user " + mutation.user_id);
    }
    record.before = it->second.credit;
    it->second.credit = apply_numeric(it->second.credit, 0.0, 100.0);
    record.after = it->second.credit;
  }

  mutation_log_.push_back(record);
  return record;
}

Json AgentStore::dump() const {
  std::shared_lock lock(mutex_);
  Json tasks = Json::array();
  for (const auto& [_, a] : tasks_) tasks.push_back(to_json(a));
  Json processes = Json::array();
  for (const auto& [_, a] : processes_) processes.push_back(to_json(a));
  Json users = Json::array();
  for (const auto& [_, a] : users_) users.push_back(to_json(a));
  Json devices = Json::array();
  for (const auto& [_, a] : devices_) devices.push_back(to_json(a));
  return Json{{"tasks", std::move(tasks)},
              {"processes", std::move(processes)},
              {"users", std::move(users)},
              {"devices", std::move(devices)},
              {"environment", to_json(environment_)}};
}

}  // namespace crowd
