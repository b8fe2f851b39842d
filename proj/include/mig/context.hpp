#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mig/char_table.hpp"
#include "mig/corpus.hpp"
#include "mig/mi.hpp"

namespace mig {

// everything the engine derives from one corpus record, computed on first
// use and cached for the rest of the run
struct GroupBundle {
  const CorpusGroup* record = nullptr;
  std::shared_ptr<const PermGroup> group;
  std::shared_ptr<const ClassTable> classes;
  std::shared_ptr<const CharacterTable> chars;
  SubgroupTier tier = SubgroupTier::kEnumerated;
  // proper subgroups admitted to witness searches, in search order
  // (descending order, then name)
  std::vector<SubgroupData> maximals;
  // recorded subgroups not tagged maximal, same preparation
  std::vector<SubgroupData> extras;

  uint64_t order() const { return group->order(); }
};

// per-run cache of derived group data over one loaded corpus.  groups whose
// order fits the subgroup cap get their maximal classes enumerated from the
// lattice (named M1, M2, ... in search order); larger groups fall back to
// the records tagged claimed_maximal
class Context {
 public:
  explicit Context(Corpus corpus, int jobs = 1, uint64_t subgroup_cap = kSubgroupEnumCap);

  const Corpus& corpus() const { return corpus_; }
  int jobs() const { return jobs_; }
  uint64_t subgroup_cap() const { return subgroup_cap_; }

  // throws UnknownGroup for names outside the corpus
  const GroupBundle& bundle(const std::string& name);

 private:
  Corpus corpus_;
  int jobs_;
  uint64_t subgroup_cap_;
  std::map<std::string, GroupBundle> cache_;
};

}  // namespace mig
