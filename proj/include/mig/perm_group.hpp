#ifndef MIG_PERM_GROUP_HPP
#define MIG_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "mig/perm.hpp"

namespace mig {

constexpr uint64_t kEnumerationCap = 1ull << 20;
constexpr uint64_t kSubgroupEnumCap = 384;

// deterministic incremental Schreier-Sims stabilizer chain.
// base points are always the smallest moved point available, so the same
// generator list yields the same chain on every run.
class StabChain {
 public:
  explicit StabChain(int degree) : degree_(degree) {}

  // returns true if g was outside the group so far (and is now included)
  bool add_generator(const Perm& g);

  bool contains(const Perm& g) const;
  uint64_t order() const;
  int degree() const { return degree_; }
  size_t base_length() const { return levels_.size(); }
  int base_point(size_t level) const { return levels_[level].beta; }

  // strong generators fixing the first `level` base points pointwise;
  // level 0 gives a full generating set of the group
  std::vector<Perm> strong_generators(size_t level) const;

  // forces the given points to head the base (used for point stabilizers)
  void seed_base(const std::vector<int>& points);

 private:
  struct Level {
    int beta = -1;
    std::vector<int> orbit;             // discovery order, orbit[0] == beta
    std::vector<int> orbit_pos;         // point -> index+1 into orbit, 0 if absent
    std::vector<Perm> transversal;      // aligned with orbit; beta^t = orbit[i]
  };

  int degree_;
  std::vector<Level> levels_;
  std::vector<Perm> sgens_;        // all strong generators
  std::vector<size_t> sgen_level_; // deepest level whose base prefix the gen fixes

  std::vector<const Perm*> gens_at(size_t level) const;
  void rebuild_orbit(size_t level);
  // sift g through levels [from, end); returns residue and the level it stopped at
  std::pair<Perm, size_t> strip(Perm g, size_t from) const;
  void ensure_level(size_t level, const Perm& witness);
  void complete_from(size_t level);
};

// enumerated element list in breadth-first order from the identity;
// index 0 is always the identity
struct Enumeration {
  std::vector<Perm> elements;
  std::unordered_map<Perm, uint32_t, PermHash> index;

  uint32_t index_of(const Perm& p) const;  // throws NotInGroup if absent
  size_t size() const { return elements.size(); }
};

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            const std::vector<int>& base_hint = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const { return chain_->order(); }
  bool contains(const Perm& g) const { return chain_->contains(g); }
  bool is_trivial() const { return order() == 1; }
  const StabChain& chain() const { return *chain_; }

  // subgroup fixing the given 1-based points pointwise (chain seeded with them)
  PermGroup point_stabilizer(const std::vector<int>& points) const;

  std::shared_ptr<const Enumeration> enumerate(uint64_t cap = kEnumerationCap) const;

  bool is_subgroup_of(const PermGroup& big) const;
  bool is_normal_in(const PermGroup& big) const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<StabChain> chain_;
  mutable std::shared_ptr<const Enumeration> enum_cache_;
};

PermGroup group_from_generators(int degree, const std::vector<Perm>& gens);

// a short deterministic generating sequence: walk the enumeration, keep
// what enlarges the generated subgroup.  useful for groups built by
// filtering elements, whose generator list is the whole element set
std::vector<Perm> small_generating_set(const PermGroup& g, uint64_t cap = kEnumerationCap);

// smallest normal subgroup of g containing the seeds
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

PermGroup derived_subgroup(const PermGroup& g);

// [G, G', G'', ...] down to the point where the order stops shrinking
std::vector<PermGroup> derived_series(const PermGroup& g);

bool is_solvable(const PermGroup& g);

}  // namespace mig

#endif  // MIG_PERM_GROUP_HPP
