#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mig/perm_group.hpp"

namespace mig {

// on-disk group corpus: named generator sets with declared orders and
// subgroup lists.  subgroup records tagged claimed_maximal form the
// maximal-subgroup data for groups too large for lattice enumeration;
// untagged records are extra subgroups of interest

struct CorpusSubgroup {
  std::string name;
  std::vector<Perm> generators;
  bool claimed_maximal = false;
  std::shared_ptr<const PermGroup> group;
};

struct CorpusGroup {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;
  uint64_t expected_order = 0;
  std::string notes;
  std::shared_ptr<const PermGroup> group;
  std::vector<CorpusSubgroup> subgroups;
};

struct Corpus {
  std::vector<CorpusGroup> groups;
  uint64_t checksum = 0;  // FNV-1a over the file bytes, quoted in reports
  std::string path;

  bool has(const std::string& name) const;
  const CorpusGroup& find(const std::string& name) const;  // throws UnknownGroup
};

// parse and verify: orders must match expected_order (OrderMismatch) and
// every subgroup generator must lie in its parent (SubgroupNotContained)
Corpus load_corpus(const std::string& path);

// location baked in at configure time (data/corpus.json)
std::string default_corpus_path();

// canonical serialization used by the generator tool; sorted keys, stable
// formatting, newline-terminated
std::string corpus_json_text(const std::vector<CorpusGroup>& groups);

}  // namespace mig
