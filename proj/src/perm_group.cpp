#include "mig/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "mig/errors.hpp"

namespace mig {

// ---------------------------------------------------------------- StabChain

std::vector<const Perm*> StabChain::gens_at(size_t level) const {
  std::vector<const Perm*> out;
  for (size_t i = 0; i < sgens_.size(); i++)
    if (sgen_level_[i] >= level) out.push_back(&sgens_[i]);
  return out;
}

void StabChain::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  auto gens = gens_at(level);
  lv.orbit.clear();
  lv.orbit_pos.assign(degree_, 0);
  lv.transversal.clear();
  lv.orbit.push_back(lv.beta);
  lv.orbit_pos[lv.beta] = 1;
  lv.transversal.push_back(Perm::identity(degree_));
  for (size_t i = 0; i < lv.orbit.size(); i++) {
    int p = lv.orbit[i];
    for (const Perm* g : gens) {
      int q = g->apply(p);
      if (!lv.orbit_pos[q]) {
        lv.orbit.push_back(q);
        lv.orbit_pos[q] = static_cast<int>(lv.orbit.size());
        lv.transversal.push_back(lv.transversal[i] * *g);
      }
    }
  }
}

std::pair<Perm, size_t> StabChain::strip(Perm g, size_t from) const {
  for (size_t l = from; l < levels_.size(); l++) {
    const Level& lv = levels_[l];
    int p = g.apply(lv.beta);
    int pos = lv.orbit_pos[p];
    if (!pos) return {std::move(g), l};
    g = g * lv.transversal[pos - 1].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabChain::ensure_level(size_t level, const Perm& witness) {
  if (level < levels_.size()) return;
  if (level != levels_.size())
    throw InternalError("stabilizer chain level skipped");
  Level lv;
  lv.beta = witness.smallest_moved_point();
  levels_.push_back(lv);
  rebuild_orbit(levels_.size() - 1);
}

void StabChain::seed_base(const std::vector<int>& points) {
  if (!sgens_.empty()) throw InternalError("seed_base after generators were added");
  for (int b : points) {
    Level lv;
    lv.beta = b;
    levels_.push_back(lv);
    rebuild_orbit(levels_.size() - 1);
  }
}

bool StabChain::add_generator(const Perm& g) {
  auto [res, lev] = strip(g, 0);
  if (res.is_identity()) return false;
  ensure_level(lev, res);
  sgens_.push_back(res);
  sgen_level_.push_back(lev);
  // a generator at level `lev` also enlarges the generator sets of every
  // shallower level, so the whole chain must be re-verified
  complete_from(0);
  return true;
}

// classic bottom-up Schreier generator closure: verify each level's Schreier
// generators strip to the identity through the deeper levels, jumping back to
// the deepest level whenever a residue is inserted. Orbits are rebuilt on
// entry to a level since insertions anywhere deepen shallow generator sets.
void StabChain::complete_from(size_t start) {
  size_t level = levels_.size();
  while (level > start) {
    level--;
    rebuild_orbit(level);
    bool restart = false;
    Level& lv = levels_[level];
    auto gens = gens_at(level);
    // note: !restart must be checked first: ensure_level below may reallocate
    // levels_ and invalidate lv
    for (size_t oi = 0; !restart && oi < lv.orbit.size(); oi++) {
      for (const Perm* s : gens) {
        int q = s->apply(lv.orbit[oi]);
        const Perm& tq = lv.transversal[lv.orbit_pos[q] - 1];
        Perm u = lv.transversal[oi] * *s * tq.inverse();
        if (u.is_identity()) continue;
        auto [res, rlev] = strip(std::move(u), level + 1);
        if (res.is_identity()) continue;
        ensure_level(rlev, res);
        sgens_.push_back(res);
        sgen_level_.push_back(rlev);
        level = levels_.size();  // re-verify everything at and below rlev
        restart = true;
        break;
      }
    }
  }
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, lev] = strip(g, 0);
  (void)lev;
  return res.is_identity();
}

uint64_t StabChain::order() const {
  uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.orbit.size();
  return n;
}

std::vector<Perm> StabChain::strong_generators(size_t level) const {
  std::vector<Perm> out;
  for (size_t i = 0; i < sgens_.size(); i++)
    if (sgen_level_[i] >= level) out.push_back(sgens_[i]);
  return out;
}

// --------------------------------------------------------------- PermGroup

uint32_t Enumeration::index_of(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw NotInGroup("element not in enumerated group");
  return it->second;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     const std::vector<int>& base_hint)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from group degree");
  chain_ = std::make_shared<StabChain>(degree_);
  if (!base_hint.empty()) chain_->seed_base(base_hint);
  for (const Perm& g : gens_) chain_->add_generator(g);
}

PermGroup PermGroup::point_stabilizer(const std::vector<int>& points) const {
  std::vector<int> base;
  for (int p : points) {
    if (p < 1 || p > degree_) throw PointOutOfRange("stabilizer point out of range");
    base.push_back(p - 1);  // external points are 1-based
  }
  StabChain seeded(degree_);
  seeded.seed_base(base);
  for (const Perm& g : gens_) seeded.add_generator(g);
  std::vector<Perm> sub = seeded.strong_generators(points.size());
  if (sub.empty()) sub.push_back(Perm::identity(degree_));
  return PermGroup(degree_, std::move(sub));
}

std::shared_ptr<const Enumeration> PermGroup::enumerate(uint64_t cap) const {
  if (enum_cache_ && enum_cache_->size() <= cap) return enum_cache_;
  if (order() > cap)
    throw CapExceeded("group order " + std::to_string(order()) +
                      " exceeds enumeration cap " + std::to_string(cap));
  auto en = std::make_shared<Enumeration>();
  en->elements.push_back(Perm::identity(degree_));
  en->index.reserve(static_cast<size_t>(order()) * 2);
  en->index.emplace(en->elements[0], 0);
  for (size_t i = 0; i < en->elements.size(); i++) {
    for (const Perm& g : gens_) {
      Perm next = en->elements[i] * g;
      if (en->index.emplace(next, static_cast<uint32_t>(en->elements.size())).second)
        en->elements.push_back(std::move(next));
    }
  }
  enum_cache_ = en;
  return en;
}

bool PermGroup::is_subgroup_of(const PermGroup& big) const {
  if (degree_ != big.degree()) return false;
  for (const Perm& g : gens_)
    if (!big.contains(g)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& big) const {
  if (!is_subgroup_of(big)) return false;
  for (const Perm& g : big.generators())
    for (const Perm& h : gens_)
      if (!contains(h.conjugated_by(g))) return false;
  return true;
}

PermGroup group_from_generators(int degree, const std::vector<Perm>& gens) {
  return PermGroup(degree, gens);
}

std::vector<Perm> small_generating_set(const PermGroup& g, uint64_t cap) {
  auto en = g.enumerate(cap);
  StabChain chain(g.degree());
  std::vector<Perm> gens;
  for (const Perm& x : en->elements) {
    if (chain.contains(x)) continue;
    chain.add_generator(x);
    gens.push_back(x);
    if (chain.order() == g.order()) break;
  }
  if (gens.empty()) gens.push_back(Perm::identity(g.degree()));
  return gens;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  StabChain chain(g.degree());
  std::vector<Perm> gens;
  std::deque<Perm> work;
  for (const Perm& s : seeds)
    if (chain.add_generator(s)) {
      gens.push_back(s);
      work.push_back(s);
    }
  while (!work.empty()) {
    Perm h = std::move(work.front());
    work.pop_front();
    for (const Perm& x : g.generators()) {
      Perm c = h.conjugated_by(x);
      if (chain.add_generator(c)) {
        gens.push_back(c);
        work.push_back(c);
      }
    }
  }
  if (gens.empty()) gens.push_back(Perm::identity(g.degree()));
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

}  // namespace mig
