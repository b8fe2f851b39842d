#pragma once

#include <memory>
#include <vector>

#include "mig/class_table.hpp"
#include "mig/perm_group.hpp"

namespace mig {

// all subgroups of g up to conjugacy, one canonical representative per
// class, sorted by (order, element set).  built by closing the cyclic
// subgroups under single-element extensions with conjugacy deduplication,
// which reaches every class: any subgroup is a one-element extension of any
// of its maximal subgroups.  requires |g| <= cap; the cap cannot exceed
// the compiled ceiling kSubgroupEnumCap
std::vector<PermGroup> enumerate_subgroups(std::shared_ptr<const PermGroup> g,
                                           uint64_t cap = kSubgroupEnumCap);

// maximal subgroups up to conjugacy, sorted by descending order then
// element set; same cap as enumerate_subgroups
std::vector<PermGroup> maximal_subgroups(std::shared_ptr<const PermGroup> g,
                                         uint64_t cap = kSubgroupEnumCap);

// a normal subgroup is a union of conjugacy classes; the class ids are
// recorded alongside the group
struct NormalSubgroup {
  PermGroup group;
  uint64_t order;
  std::vector<uint32_t> classes;  // ascending ids of the classes it contains
};

// every normal subgroup, found by joining normal closures of single
// classes; sorted by (order, class list)
std::vector<NormalSubgroup> normal_subgroups(std::shared_ptr<const ClassTable> t);

// certifies maximality of a proper subgroup h < g directly: <h, x> = g must
// hold for every x outside h, and one witness x per (h, h)-double coset
// suffices since <h, a x b> = <h, x> for a, b in h
bool is_maximal_subgroup(std::shared_ptr<const PermGroup> g, const PermGroup& h,
                         uint64_t cap = kEnumerationCap);

// N_G(h) and C_G(x), by filtering the full enumeration
PermGroup normalizer(std::shared_ptr<const PermGroup> g, const PermGroup& h,
                     uint64_t cap = kEnumerationCap);
PermGroup centralizer(std::shared_ptr<const PermGroup> g, const Perm& x,
                      uint64_t cap = kEnumerationCap);

// stabilizer of a set of points (1-based), as a set
PermGroup set_stabilizer(std::shared_ptr<const PermGroup> g, const std::vector<int>& points,
                         uint64_t cap = kEnumerationCap);

}  // namespace mig
