#include "mig/context.hpp"

#include <algorithm>
#include <utility>

#include "mig/class_table.hpp"
#include "mig/subgroup_lattice.hpp"

namespace mig {

Context::Context(Corpus corpus, int jobs, uint64_t subgroup_cap)
    : corpus_(std::move(corpus)),
      jobs_(jobs),
      subgroup_cap_(std::min<uint64_t>(subgroup_cap, kSubgroupEnumCap)) {}

const GroupBundle& Context::bundle(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;

  const CorpusGroup& rec = corpus_.find(name);
  GroupBundle b;
  b.record = &rec;
  b.group = rec.group;
  b.classes = conjugacy_classes(b.group);
  b.chars = std::make_shared<CharacterTable>(character_table(b.classes, jobs_));

  std::vector<NamedSubgroup> maximal_list;
  if (b.group->order() <= subgroup_cap_) {
    b.tier = SubgroupTier::kEnumerated;
    std::vector<PermGroup> found = maximal_subgroups(b.group, subgroup_cap_);
    for (size_t i = 0; i < found.size(); i++) {
      maximal_list.push_back(
          {"M" + std::to_string(i + 1), std::make_shared<PermGroup>(std::move(found[i]))});
    }
  } else {
    b.tier = SubgroupTier::kSupplied;
    for (const CorpusSubgroup& s : rec.subgroups) {
      if (s.claimed_maximal) maximal_list.push_back({s.name, s.group});
    }
    std::sort(maximal_list.begin(), maximal_list.end(),
              [](const NamedSubgroup& x, const NamedSubgroup& y) {
                if (x.group->order() != y.group->order())
                  return x.group->order() > y.group->order();
                return x.name < y.name;
              });
  }
  b.maximals = prepare_subgroups(b.classes, maximal_list, jobs_);

  std::vector<NamedSubgroup> extra_list;
  for (const CorpusSubgroup& s : rec.subgroups) {
    if (!s.claimed_maximal) extra_list.push_back({s.name, s.group});
  }
  b.extras = prepare_subgroups(b.classes, extra_list, jobs_);

  return cache_.emplace(name, std::move(b)).first->second;
}

}  // namespace mig
