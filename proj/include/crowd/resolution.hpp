#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "crowd/agents.hpp"
#include "crowd/errors.hpp"
#include "crowd/task.hpp"

namespace crowd {

// Task-critical information pulled out of the free-text description.
struct KeyInfo {
  std::string topic;
  std::string manner;
  std::optional<GeoPoint> location;
  double radius_m = 0.0;
  std::optional<TimeRange> time_window;
  std::optional<std::uint64_t> participant_count;
  std::optional<double> duration_days;
  std::set<std::string> keywords;
};

struct LexiconEntry {
  std::string keyword;
  std::string topic;
  std::string slot;  // optional: "manner" routes the keyword into that slot
};

// Keyword -> topic mapping table. Versioned so the vector schema hash moves
// when the lexicon changes.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(int version, std::vector<LexiconEntry> entries);

  static Lexicon from_json(const Json& j);

  int version() const { return version_; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::vector<std::string> topics() const;   // sorted, unique
  std::vector<std::string> keywords() const; // sorted

 private:
  int version_ = 1;
  std::vector<LexiconEntry> entries_;
};

// Normalization caps for the bounded [0,1] scalar dims.
struct VectorCaps {
  double participant_count = 100.0;
  double radius_m = 10000.0;
  double duration_days = 30.0;
  double reward = 1000.0;
};

// Deterministic featurizer standing in for the encoder network: fixed-layout
// vector of one-hot classification, one-hot topic, normalized scalars and
// keyword-presence bits.
class Resolver {
 public:
  Resolver(Lexicon lexicon, std::vector<std::string> classifications,
           VectorCaps caps);

  KeyInfo extract_key_info(const std::string& description,
                           const std::string& lang) const;

  TaskVector encode(const KeyInfo& info,
                    const std::map<std::string, double>& discrete) const;

  // Fraction of key slots the extraction filled, scaled to (0, 10].
  // Feeds the entropy term as description clarity.
  double description_clarity(const KeyInfo& info) const;

  std::uint64_t schema_hash() const { return schema_hash_; }
  std::size_t dimension() const { return dim_names_.size(); }
  const std::vector<std::string>& dim_names() const { return dim_names_; }
  std::optional<std::size_t> dim_index(const std::string& name) const;
  const Lexicon& lexicon() const { return lexicon_; }

 private:
  Lexicon lexicon_;
  std::vector<std::string> classifications_;
  VectorCaps caps_;
  std::vector<std::string> dim_names_;
  std::map<std::string, std::size_t> dim_index_;
  std::uint64_t schema_hash_ = 0;
};

// Populates the TaskAgent from the vector and extracted info (conversion P1).
// Phase advancement stays with the caller.
TaskAgent decode_to_agent(const TaskVector& vector, const KeyInfo& info,
                          Tid tid, const TaskSpec& spec,
                          const RawTaskInput& raw);

}  // namespace crowd
