#include "mig/subgroup_lattice.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "mig/errors.hpp"
#include "mig/induction.hpp"

namespace mig {

namespace {

using IdxSet = std::vector<uint32_t>;                       // sorted element indices
using Mask = std::array<uint64_t, kSubgroupEnumCap / 64>;   // element bitmask

Mask to_mask(const IdxSet& s) {
  Mask m{};
  for (uint32_t x : s) m[x >> 6] |= 1ull << (x & 63);
  return m;
}

bool mask_subset(const Mask& a, const Mask& b) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] & ~b[i]) return false;
  return true;
}

struct Lattice {
  std::shared_ptr<const PermGroup> g;
  std::shared_ptr<const Enumeration> en;
  std::vector<std::vector<uint32_t>> conj;  // conj[i][j] = index of x_j conjugated by x_i
  std::vector<IdxSet> sets;                 // canonical element set per class
  std::vector<PermGroup> groups;            // rep built from a small generating set
};

// a small deterministic generating set: walk the element set, keep what
// enlarges the generated subgroup
std::vector<Perm> small_generators(const IdxSet& s, const Enumeration& en, int degree) {
  StabChain chain(degree);
  std::vector<Perm> gens;
  for (uint32_t x : s) {
    const Perm& p = en.elements[x];
    if (chain.contains(p)) continue;
    chain.add_generator(p);
    gens.push_back(p);
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return gens;
}

IdxSet element_set(const PermGroup& h, const Enumeration& en) {
  IdxSet s;
  auto sub = h.enumerate(kSubgroupEnumCap);
  s.reserve(sub->size());
  for (const Perm& x : sub->elements) s.push_back(en.index_of(x));
  std::sort(s.begin(), s.end());
  return s;
}

Lattice build_lattice(std::shared_ptr<const PermGroup> g, uint64_t cap) {
  cap = std::min(cap, kSubgroupEnumCap);
  if (g->order() > cap)
    throw CapExceeded("subgroup lattice enumeration is capped at order " +
                      std::to_string(cap));
  Lattice lat;
  lat.g = g;
  lat.en = g->enumerate(kSubgroupEnumCap);
  const Enumeration& en = *lat.en;
  size_t n = en.size();

  lat.conj.assign(n, std::vector<uint32_t>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      lat.conj[i][j] = en.index_of(en.elements[j].conjugated_by(en.elements[i]));

  auto canon = [&](const IdxSet& s) {
    IdxSet best;
    IdxSet img(s.size());
    for (size_t i = 0; i < n; i++) {
      for (size_t t = 0; t < s.size(); t++) img[t] = lat.conj[i][s[t]];
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    return best;
  };

  std::set<IdxSet> seen_exact;
  std::map<IdxSet, size_t> class_of;
  std::vector<std::vector<Perm>> gens_of;
  std::deque<size_t> queue;

  auto add_candidate = [&](const IdxSet& s) {
    if (!seen_exact.insert(s).second) return;
    IdxSet c = canon(s);
    if (class_of.count(c)) return;
    seen_exact.insert(c);
    size_t id = lat.sets.size();
    class_of[c] = id;
    std::vector<Perm> gens = small_generators(c, en, g->degree());
    lat.sets.push_back(c);
    lat.groups.emplace_back(g->degree(), gens);
    gens_of.push_back(std::move(gens));
    queue.push_back(id);
  };

  // seeds: every cyclic subgroup
  for (size_t j = 0; j < n; j++) {
    PermGroup cyc(g->degree(), {en.elements[j]});
    add_candidate(element_set(cyc, en));
  }
  // close under single-element extensions
  while (!queue.empty()) {
    size_t id = queue.front();
    queue.pop_front();
    IdxSet s = lat.sets[id];
    if (s.size() == n) continue;
    Mask m = to_mask(s);
    std::vector<Perm> base_gens = gens_of[id];
    for (uint32_t x = 0; x < n; x++) {
      if (m[x >> 6] & (1ull << (x & 63))) continue;
      std::vector<Perm> eg = base_gens;
      eg.push_back(en.elements[x]);
      PermGroup k(g->degree(), eg);
      add_candidate(element_set(k, en));
    }
  }

  // sort classes by (order, canonical set)
  std::vector<size_t> idx(lat.sets.size());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (lat.sets[a].size() != lat.sets[b].size()) return lat.sets[a].size() < lat.sets[b].size();
    return lat.sets[a] < lat.sets[b];
  });
  std::vector<IdxSet> ns;
  std::vector<PermGroup> ng;
  for (size_t i : idx) {
    ns.push_back(std::move(lat.sets[i]));
    ng.push_back(std::move(lat.groups[i]));
  }
  lat.sets = std::move(ns);
  lat.groups = std::move(ng);
  return lat;
}

}  // namespace

std::vector<PermGroup> enumerate_subgroups(std::shared_ptr<const PermGroup> g, uint64_t cap) {
  return build_lattice(std::move(g), cap).groups;
}

std::vector<PermGroup> maximal_subgroups(std::shared_ptr<const PermGroup> g, uint64_t cap) {
  Lattice lat = build_lattice(std::move(g), cap);
  size_t n = lat.en->size();
  size_t classes = lat.sets.size();

  // families of conjugate element masks per class
  std::vector<std::vector<Mask>> fam(classes);
  std::vector<Mask> class_mask(classes);
  for (size_t i = 0; i < classes; i++) {
    class_mask[i] = to_mask(lat.sets[i]);
    std::set<Mask> fs;
    for (size_t c = 0; c < n; c++) {
      IdxSet img(lat.sets[i].size());
      for (size_t t = 0; t < img.size(); t++) img[t] = lat.conj[c][lat.sets[i][t]];
      fs.insert(to_mask(img));
    }
    fam[i].assign(fs.begin(), fs.end());
  }

  std::vector<PermGroup> out;
  for (size_t i = 0; i < classes; i++) {
    if (lat.sets[i].size() == n) continue;  // the whole group
    bool maximal = true;
    for (size_t j = 0; j < classes && maximal; j++) {
      if (lat.sets[j].size() <= lat.sets[i].size() || lat.sets[j].size() == n) continue;
      for (const Mask& m : fam[i])
        if (mask_subset(m, class_mask[j])) {
          maximal = false;
          break;
        }
    }
    if (maximal) out.push_back(lat.groups[i]);
  }
  // descending order, then canonical set: the natural search order later
  std::stable_sort(out.begin(), out.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() > b.order(); });
  return out;
}

std::vector<NormalSubgroup> normal_subgroups(std::shared_ptr<const ClassTable> t) {
  const PermGroup& g = *t->group;
  size_t r = t->num_classes();

  auto profile = [&](const PermGroup& h) {
    std::vector<uint32_t> cls;
    uint64_t covered = 0;
    for (size_t c = 0; c < r; c++)
      if (h.contains(t->rep(c))) {
        cls.push_back(static_cast<uint32_t>(c));
        covered += t->sizes[c];
      }
    if (covered != h.order()) throw InternalError("normal subgroup is not a union of classes");
    return cls;
  };

  // normal closures of the single classes are the join-generators
  std::vector<PermGroup> gen_closures;
  gen_closures.reserve(r);
  for (size_t c = 0; c < r; c++) gen_closures.push_back(normal_closure(g, {t->rep(c)}));

  std::map<std::vector<uint32_t>, PermGroup> found;
  std::deque<std::vector<uint32_t>> queue;
  for (const PermGroup& nc : gen_closures) {
    auto prof = profile(nc);
    if (found.emplace(prof, nc).second) queue.push_back(prof);
  }
  while (!queue.empty()) {
    std::vector<uint32_t> prof = queue.front();
    queue.pop_front();
    PermGroup cur = found.at(prof);
    for (size_t c = 0; c < r; c++) {
      if (std::binary_search(prof.begin(), prof.end(), static_cast<uint32_t>(c))) continue;
      std::vector<Perm> seeds = cur.generators();
      seeds.push_back(t->rep(c));
      PermGroup join = normal_closure(g, seeds);
      auto jp = profile(join);
      if (found.emplace(jp, join).second) queue.push_back(jp);
    }
  }

  std::vector<NormalSubgroup> out;
  for (auto& [prof, grp] : found)
    out.push_back(NormalSubgroup{grp, grp.order(), prof});
  std::sort(out.begin(), out.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.classes < b.classes;
  });
  return out;
}

bool is_maximal_subgroup(std::shared_ptr<const PermGroup> g, const PermGroup& h, uint64_t cap) {
  if (h.order() >= g->order() || !h.is_subgroup_of(*g))
    throw NotSubgroup("maximality test needs a proper subgroup");
  for (const Perm& x : double_cosets(g, h, h, cap)) {
    if (h.contains(x)) continue;  // the double coset of h itself
    std::vector<Perm> gens = h.generators();
    gens.push_back(x);
    if (PermGroup(g->degree(), gens).order() != g->order()) return false;
  }
  return true;
}

PermGroup normalizer(std::shared_ptr<const PermGroup> g, const PermGroup& h, uint64_t cap) {
  auto en = g->enumerate(cap);
  std::vector<Perm> keep;
  for (const Perm& x : en->elements) {
    bool ok = true;
    for (const Perm& a : h.generators())
      if (!h.contains(a.conjugated_by(x))) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(x);
  }
  return PermGroup(g->degree(), keep);
}

PermGroup centralizer(std::shared_ptr<const PermGroup> g, const Perm& x, uint64_t cap) {
  auto en = g->enumerate(cap);
  std::vector<Perm> keep;
  for (const Perm& y : en->elements)
    if (x * y == y * x) keep.push_back(y);
  return PermGroup(g->degree(), keep);
}

PermGroup set_stabilizer(std::shared_ptr<const PermGroup> g, const std::vector<int>& points,
                         uint64_t cap) {
  std::vector<char> in_set(g->degree() + 1, 0);
  for (int p : points) {
    if (p < 1 || p > g->degree()) throw PointOutOfRange("set stabilizer point out of range");
    in_set[p] = 1;
  }
  auto en = g->enumerate(cap);
  std::vector<Perm> keep;
  for (const Perm& x : en->elements) {
    bool ok = true;
    for (int p : points)
      if (!in_set[x.apply(p - 1) + 1]) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(x);
  }
  return PermGroup(g->degree(), keep);
}

}  // namespace mig
