#include "crowd/resolution.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace crowd {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-') {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

bool space_delimited(const std::string& lang) {
  // Word segmentation for other languages is out of scope; those fall back
  // to whole-string substring matching.
  static const std::set<std::string> langs = {"en", "de", "fr", "es", "it", "pt"};
  return langs.count(to_lower(lang)) > 0;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Lexicon::Lexicon(int version, std::vector<LexiconEntry> entries)
    : version_(version), entries_(std::move(entries)) {
  std::map<std::string, std::string> seen;
  for (const auto& e : entries_) {
    auto [it, inserted] = seen.emplace(e.keyword, e.topic);
    if (!inserted && it->second != e.topic) {
      fail(ErrorCode::ValidationError,
           "lexicon keyword '" + e.keyword + "' maps to two topics");
    }
  }
}

Lexicon Lexicon::from_json(const Json& j) {
  std::vector<LexiconEntry> entries;
  int version = j.value("version", 1);
  for (const auto& item : j.at("entries")) {
    LexiconEntry e;
    e.keyword = to_lower(item.at("keyword").get<std::string>());
    e.topic = item.at("topic").get<std::string>();
    e.slot = item.value("slot", "");
    entries.push_back(std::move(e));
  }
  return Lexicon(version, std::move(entries));
}

std::vector<std::string> Lexicon::topics() const {
  std::set<std::string> unique;
  for (const auto& e : entries_) unique.insert(e.topic);
  return {unique.begin(), unique.end()};
}

std::vector<std::string> Lexicon::keywords() const {
  std::set<std::string> unique;
  for (const auto& e : entries_) unique.insert(e.keyword);
  return {unique.begin(), unique.end()};
}

Resolver::Resolver(Lexicon lexicon, std::vector<std::string> classifications,
                   VectorCaps caps)
    : lexicon_(std::move(lexicon)),
      classifications_(std::move(classifications)),
      caps_(caps) {
  for (const auto& c : classifications_) dim_names_.push_back("class:" + c);
  for (const auto& t : lexicon_.topics()) dim_names_.push_back("topic:" + t);
  dim_names_.push_back("has_location");
  dim_names_.push_back("radius");
  dim_names_.push_back("duration");
  dim_names_.push_back("participant_count");
  dim_names_.push_back("reward");
  for (const auto& k : lexicon_.keywords()) dim_names_.push_back("kw:" + k);

  for (std::size_t i = 0; i < dim_names_.size(); ++i) {
    dim_index_[dim_names_[i]] = i;
  }

  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, "v" + std::to_string(lexicon_.version()));
  for (const auto& n : dim_names_) h = fnv1a(h, n);
  std::ostringstream caps_sig;
  caps_sig << caps_.participant_count << "|" << caps_.radius_m << "|"
           << caps_.duration_days << "|" << caps_.reward;
  schema_hash_ = fnv1a(h, caps_sig.str());
}

std::optional<std::size_t> Resolver::dim_index(const std::string& name) const {
  auto it = dim_index_.find(name);
  if (it == dim_index_.end()) return std::nullopt;
  return it->second;
}

KeyInfo Resolver::extract_key_info(const std::string& description,
                                   const std::string& lang) const {
  if (description.empty()) fail(ErrorCode::EmptyDescription);

  KeyInfo info;
  const std::string lowered = to_lower(description);
  std::map<std::string, int> topic_votes;

  if (space_delimited(lang)) {
    const std::vector<std::string> tokens = tokenize(lowered);
    std::set<std::string> token_set(tokens.begin(), tokens.end());
    for (const auto& e : lexicon_.entries()) {
      bool hit = e.keyword.find(' ') == std::string::npos
                     ? token_set.count(e.keyword) > 0
                     : lowered.find(e.keyword) != std::string::npos;
      if (!hit) continue;
      info.keywords.insert(e.keyword);
      topic_votes[e.topic]++;
      if (e.slot == "manner") info.manner = e.keyword;
    }
  } else {
    for (const auto& e : lexicon_.entries()) {
      if (lowered.find(e.keyword) == std::string::npos) continue;
      info.keywords.insert(e.keyword);
      topic_votes[e.topic]++;
      if (e.slot == "manner") info.manner = e.keyword;
    }
  }

  if (topic_votes.empty()) {
    fail(ErrorCode::NoTopicFound, "no lexicon hits in description");
  }
  // Majority topic; ties resolve to the lexicographically smallest tag.
  int best = 0;
  for (const auto& [topic, votes] : topic_votes) {
    if (votes > best) {
      best = votes;
      info.topic = topic;
    }
  }

  // Numeric slots. Durations and radii are consumed first so the remaining
  // bare count can be read as the participant/result scale.
  static const std::regex duration_re(
      R"((\d+)\s*(day|days|d\b|hour|hours|h\b|week|weeks))",
      std::regex::icase);
  static const std::regex radius_re(
      R"((\d+(?:\.\d+)?)\s*(km|kilometers|kilometres|m\b|meters|metres))",
      std::regex::icase);
  static const std::regex count_re(R"((\d+))");

  std::set<std::size_t> consumed;

  auto search_all = [&](const std::regex& re, auto&& handler) {
    auto begin = std::sregex_iterator(lowered.begin(), lowered.end(), re);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      handler(*it);
      consumed.insert(static_cast<std::size_t>(it->position(1)));
    }
  };

  search_all(duration_re, [&](const std::smatch& match) {
    if (info.duration_days) return;
    double value = std::stod(match[1].str());
    std::string unit = to_lower(match[2].str());
    if (unit[0] == 'h') value /= 24.0;
    if (unit[0] == 'w') value *= 7.0;
    info.duration_days = value;
  });
  search_all(radius_re, [&](const std::smatch& match) {
    if (info.radius_m > 0.0) return;
    double value = std::stod(match[1].str());
    std::string unit = to_lower(match[2].str());
    if (unit[0] == 'k') value *= 1000.0;
    info.radius_m = value;
  });

  auto begin = std::sregex_iterator(lowered.begin(), lowered.end(), count_re);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    if (consumed.count(static_cast<std::size_t>(it->position(1)))) continue;
    info.participant_count = std::stoull((*it)[1].str());
    break;
  }

  if (info.duration_days) {
    info.time_window = TimeRange{
        0, static_cast<std::uint64_t>(*info.duration_days * 86400.0)};
  }
  return info;
}

TaskVector Resolver::encode(const KeyInfo& info,
                            const std::map<std::string, double>& discrete) const {
  TaskVector v;
  v.schema_hash = schema_hash_;
  v.dims.assign(dim_names_.size(), 0.0);

  auto set_dim = [&](const std::string& name, double value) {
    auto idx = dim_index_.find(name);
    if (idx != dim_index_.end()) v.dims[idx->second] = value;
  };

  auto cls = discrete.find("classification");
  if (cls != discrete.end()) {
    std::size_t i = static_cast<std::size_t>(cls->second);
    if (i < classifications_.size()) set_dim("class:" + classifications_[i], 1.0);
  }
  if (!info.topic.empty()) set_dim("topic:" + info.topic, 1.0);

  const bool has_loc = info.location.has_value() ||
                       discrete.count("has_location") > 0;
  set_dim("has_location", has_loc ? 1.0 : 0.0);
  double radius = info.radius_m;
  if (auto it = discrete.find("radius_m"); it != discrete.end()) radius = it->second;
  set_dim("radius", has_loc ? std::min(radius / caps_.radius_m, 1.0) : 0.0);
  if (info.duration_days) {
    set_dim("duration", std::min(*info.duration_days / caps_.duration_days, 1.0));
  }
  if (info.participant_count) {
    set_dim("participant_count",
            std::min(static_cast<double>(*info.participant_count) /
                         caps_.participant_count,
                     1.0));
  }
  if (auto it = discrete.find("reward"); it != discrete.end()) {
    set_dim("reward", std::min(it->second / caps_.reward, 1.0));
  }
  for (const auto& k : info.keywords) set_dim("kw:" + k, 1.0);
  return v;
}

double Resolver::description_clarity(const KeyInfo& info) const {
  int filled = 0;
  const int total = 5;
  if (!info.topic.empty()) ++filled;
  if (!info.manner.empty()) ++filled;
  if (info.location || info.radius_m > 0.0) ++filled;
  if (info.time_window) ++filled;
  if (info.participant_count) ++filled;
  // Floor keeps upsilon strictly positive even for a bare description.
  return std::max(1.0, 10.0 * static_cast<double>(filled) / total);
}

TaskAgent decode_to_agent(const TaskVector& vector, const KeyInfo& info,
                          Tid tid, const TaskSpec& spec,
                          const RawTaskInput& raw) {
  if (spec.tid != tid) fail(ErrorCode::UnknownTask, std::to_string(tid));

  TaskAgent agent;
  agent.task_id = tid;
  agent.process_state = TaskPhase::Generation;
  agent.task_info.vector = vector;
  agent.task_info.classification =
      !spec.classification.empty() ? spec.classification : raw.classification;
  agent.task_info.topic = info.topic;
  agent.task_info.time_range = info.time_window;
  agent.task_info.location = raw.location ? raw.location : info.location;
  agent.task_info.radius_m = raw.location ? raw.radius_m : info.radius_m;
  agent.range = agent.task_info.radius_m;
  agent.reward = raw.reward;
  agent.format = raw.format;
  return agent;
}

}  // namespace crowd
