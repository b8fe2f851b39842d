#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mig/char_table.hpp"
#include "mig/class_function.hpp"
#include "mig/induction.hpp"
#include "mig/subgroup_lattice.hpp"

namespace mig {

// where a witness search got its subgroup list
enum class SubgroupTier {
  kEnumerated,  // exhaustive maximal classes computed from the lattice
  kSupplied,    // listed in the input data; completeness rests on that claim
};

std::string tier_name(SubgroupTier t);

// named generators-only form of a subgroup, before tables are attached
struct NamedSubgroup {
  std::string name;
  std::shared_ptr<const PermGroup> group;
};

// a proper subgroup admitted to witness searches, with its tables and the
// fusion into the ambient group computed once and reused
struct SubgroupData {
  std::string name;
  std::shared_ptr<const PermGroup> group;
  std::shared_ptr<const ClassTable> classes;
  std::shared_ptr<const CharacterTable> chars;
  FusionMap fusion;         // subgroup classes -> ambient classes
  std::vector<bool> fused;  // ambient class -> has a preimage under fusion
  uint64_t index = 0;       // |G : H|
};

// compute class and character tables plus fusion for each subgroup; throws
// NotSubgroup unless every entry is a proper subgroup of g's group
std::vector<SubgroupData> prepare_subgroups(std::shared_ptr<const ClassTable> g,
                                            const std::vector<NamedSubgroup>& subs, int jobs = 1);

// why a (subgroup, lambda) candidate left the search
enum class CandidateFate {
  kArithmetic,         // the degree relations admit no multiplier m
  kFusionGap,          // chi is nonzero on a class the subgroup misses
  kInductionMismatch,  // exact induction test failed
  kWitness,
};

struct CandidateTrace {
  uint32_t subgroup = 0;  // index into the searched list
  uint32_t lambda = 0;    // index into Irr(H)
  CandidateFate fate = CandidateFate::kArithmetic;
};

// a verified factorization lambda^G = m * chi from a proper subgroup
struct MiWitness {
  uint32_t subgroup = 0;
  std::string subgroup_name;
  uint64_t subgroup_order = 0;
  uint32_t lambda = 0;  // index into Irr(H)
  Int lambda_degree;
  Int m;
};

struct MiSearch {
  std::optional<MiWitness> witness;
  std::vector<CandidateTrace> trace;  // every pair examined, in search order
};

// search the listed subgroups in order for lambda in Irr(H) and m >= 1 with
// lambda^G = m * chi exactly.  candidates are pruned first by the degree
// relations (|G:H| lambda(1) = m chi(1), m^2 <= |G:H|, chi(1) >= m lambda(1)),
// then by fusion support (an induced character vanishes on every class H
// misses, so chi must too); survivors are settled by computing lambda^G.
// the first witness in (subgroup, lambda) order ends the search
MiSearch find_mi_witness(const CharacterTable& gt, size_t chi,
                         const std::vector<SubgroupData>& subgroups);

enum class CharVerdict {
  kLinear,    // degree 1: never required to have a witness
  kExcluded,  // relative test only: the normal subgroup is in the kernel
  kMi,
  kNotMi,
};

std::string verdict_name(CharVerdict v);

struct CharReport {
  uint32_t chi = 0;
  Int degree;
  CharVerdict verdict = CharVerdict::kLinear;
  std::optional<MiWitness> witness;
  std::vector<CandidateTrace> trace;
  // for a not-mi verdict: ambient classes where chi is nonzero yet some
  // searched subgroup has no elements at all (union over the list)
  std::vector<uint32_t> obstructions;
};

struct MiReport {
  std::string group;
  SubgroupTier tier = SubgroupTier::kEnumerated;
  std::vector<std::string> subgroup_names;  // searched list, in order
  std::vector<CharReport> characters;       // one per irreducible, table order
  bool mi_group = true;                     // every in-scope character has a witness
  bool solvable = false;
  std::optional<bool> m_group;  // only computed when the lattice fits the cap
};

// run the witness search over every nonlinear irreducible; throws
// NoSubgroupData if the subgroup list is empty while one exists
MiReport mi_group_report(const std::string& name, const CharacterTable& gt,
                         const std::vector<SubgroupData>& maximals, SubgroupTier tier,
                         int jobs = 1, uint64_t subgroup_cap = kSubgroupEnumCap);

// same test restricted to the characters that do not factor through G/n,
// i.e. those whose kernel misses n; throws NotNormal
MiReport mi_relative_report(const std::string& name, const CharacterTable& gt,
                            const NormalSubgroup& n, const std::vector<SubgroupData>& maximals,
                            SubgroupTier tier, int jobs = 1,
                            uint64_t subgroup_cap = kSubgroupEnumCap);

// true when chi(c) = chi(1) on every class inside n, i.e. n <= ker chi
bool kernel_contains(const ClassFunction& chi, const NormalSubgroup& n);

// exhaustive monomiality test: every irreducible must equal lambda^G for a
// linear lambda of some subgroup (linear characters qualify trivially).
// needs the full subgroup lattice, so the enumeration order cap applies
bool is_m_group(std::shared_ptr<const ClassTable> t, int jobs = 1,
                uint64_t cap = kSubgroupEnumCap);

// screen for a degree-|G|_p character written as m * chi = lambda^G from h:
//  (1) every class of order coprime to p must meet h,
//  (2) p cannot divide m, and lambda(1) carries the full p-part of |H|,
//  (3) p-part of |G:H| >= m >= p'-part of |G:H|.
// necessary conditions only; a pair can pass all three yet admit no witness
struct SteinbergReport {
  bool semisimple_fusion = false;
  bool multiplier_p_parts = false;
  bool index_bounds = false;
  std::vector<uint32_t> missed_classes;  // p-coprime classes not meeting h
  bool all_pass() const { return semisimple_fusion && multiplier_p_parts && index_bounds; }
};

SteinbergReport steinberg_checks(const FusionMap& f, const ClassFunction& lambda, const Int& m,
                                 uint64_t p);

// ambient classes where chi is nonzero but no subgroup class fuses in; a
// nonempty result certifies that no multiple of chi is induced from the
// subgroup
std::vector<uint32_t> fusion_gap_check(const ClassFunction& chi, const FusionMap& f);

}  // namespace mig
