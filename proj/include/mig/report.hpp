#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mig/context.hpp"
#include "mig/mi.hpp"

namespace mig {

// sentence attached verbatim whenever a negative verdict rests on subgroup
// data taken from the corpus instead of an enumerated lattice
extern const char kSuppliedListCaveat[];

// outcome of one checklist item run by the verifier
struct CheckOutcome {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;  // one line of what was confirmed or what went wrong
  double ms = 0.0;     // wall time; quoted in text output only
};

// machine renderings.  deterministic by construction: keys sort, values are
// exact, and nothing time-, path-, or thread-dependent goes in.  every
// envelope carries the corpus checksum so results can be tied to the data
nlohmann::json chartab_json(const GroupBundle& b, uint64_t checksum);
nlohmann::json mi_report_json(const MiReport& r, const GroupBundle& b, uint64_t checksum);
nlohmann::json m_group_json(const MiReport& r, uint64_t checksum);
nlohmann::json checks_json(const std::vector<CheckOutcome>& checks, uint64_t checksum);
nlohmann::json corpus_list_json(const Corpus& c);

// human renderings (these may quote timings)
std::string chartab_text(const GroupBundle& b);
std::string mi_report_text(const MiReport& r, const GroupBundle& b);
std::string m_group_text(const MiReport& r);
std::string checks_text(const std::vector<CheckOutcome>& checks);
std::string corpus_list_text(const Corpus& c);

// dump(2) plus trailing newline, the one serialization used everywhere
std::string json_text(const nlohmann::json& j);

}  // namespace mig
