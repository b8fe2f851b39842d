#include "doctest.h"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "mig/char_table.hpp"
#include "mig/context.hpp"
#include "mig/errors.hpp"
#include "mig/mi.hpp"
#include "mig/subgroup_lattice.hpp"
#include "test_support.hpp"

using namespace mig;
using mig::test::classes_of;
using mig::test::group_of;

namespace {

// oracle: lambda^G(g) = (1/|H|) sum over all x in G of lambda0(x g x^-1),
// where lambda0 vanishes off H
CycValue induced_value_by_cosets(const ClassTable& gt, const ClassTable& ht,
                                 const ClassFunction& lam, size_t k) {
  CycValue acc;
  const Perm& rep = gt.rep(k);
  for (const Perm& x : gt.elems->elements) {
    Perm y = rep.conjugated_by(x);
    if (ht.group->contains(y)) acc = acc + lam.values[ht.class_of_element(y)];
  }
  Rat scale(1, ht.order());
  scale.canonicalize();
  return acc * scale;
}

std::vector<SubgroupData> enumerated_maximals(std::shared_ptr<const ClassTable> t) {
  std::vector<NamedSubgroup> named;
  auto maxes = maximal_subgroups(t->group);
  for (size_t i = 0; i < maxes.size(); i++)
    named.push_back({"M" + std::to_string(i + 1), std::make_shared<PermGroup>(maxes[i])});
  return prepare_subgroups(t, named);
}

std::vector<SubgroupData> all_proper_subgroups(std::shared_ptr<const ClassTable> t) {
  std::vector<NamedSubgroup> named;
  auto subs = enumerate_subgroups(t->group);
  for (size_t i = 0; i < subs.size(); i++) {
    if (subs[i].order() == t->order()) continue;
    named.push_back({"U" + std::to_string(i + 1), std::make_shared<PermGroup>(subs[i])});
  }
  return prepare_subgroups(t, named);
}

// the searched multiset of fates, one bucket per outcome
std::map<CandidateFate, int> fate_counts(const std::vector<CandidateTrace>& trace) {
  std::map<CandidateFate, int> n;
  for (const auto& t : trace) n[t.fate]++;
  return n;
}

size_t total_pairs(const std::vector<SubgroupData>& subs) {
  size_t n = 0;
  for (const auto& s : subs) n += s.chars->size();
  return n;
}

// re-verify a witness against the coset-sum formula at every class
void check_witness_exactly(const CharacterTable& gt, size_t chi, const MiWitness& w,
                           const std::vector<SubgroupData>& subs) {
  const SubgroupData& s = subs.at(w.subgroup);
  REQUIRE(w.subgroup_order == s.group->order());
  Int index(static_cast<unsigned long>(s.index));
  Int chi_deg = gt.degree(chi);
  CHECK(index * w.lambda_degree == w.m * chi_deg);
  CHECK(chi_deg >= w.m * w.lambda_degree);
  CHECK(w.m * w.m <= index);
  const ClassFunction& lam = s.chars->irreducibles.at(w.lambda);
  REQUIRE(lam.degree() == w.lambda_degree);
  Rat m(w.m);
  for (size_t k = 0; k < gt.classes->num_classes(); k++) {
    CycValue lhs = induced_value_by_cosets(*gt.classes, *s.classes, lam, k);
    CHECK(lhs == gt.irreducibles[chi].values[k] * m);
  }
}

// all subgroups of g as element-index sets, generated by closing every pair
// of elements; complete whenever each subgroup needs at most two generators
std::set<std::vector<uint32_t>> brute_two_generated(const PermGroup& g) {
  auto en = g.enumerate();
  size_t n = en->size();
  auto closure = [&](uint32_t a, uint32_t b) {
    std::set<uint32_t> have{0};
    std::vector<uint32_t> work{0};
    std::vector<uint32_t> gens{a, b};
    while (!work.empty()) {
      uint32_t x = work.back();
      work.pop_back();
      for (uint32_t s : gens) {
        uint32_t y = en->index_of(en->elements[x] * en->elements[s]);
        if (have.insert(y).second) work.push_back(y);
      }
    }
    return std::vector<uint32_t>(have.begin(), have.end());
  };
  std::set<std::vector<uint32_t>> out;
  for (uint32_t a = 0; a < n; a++)
    for (uint32_t b = a; b < n; b++) out.insert(closure(a, b));
  return out;
}

// independent monomiality decision: for every nonlinear irreducible, scan
// every subgroup (as a literal element set) and every linear character of
// it, comparing the coset-sum induced values classwise
bool brute_m_group(std::shared_ptr<const ClassTable> t) {
  CharacterTable gt = character_table(t);
  auto en = t->elems;
  std::vector<std::shared_ptr<const ClassTable>> tables;
  for (const auto& set : brute_two_generated(*t->group)) {
    std::vector<Perm> gens;
    for (uint32_t i : set) gens.push_back(en->elements[i]);
    tables.push_back(conjugacy_classes(std::make_shared<PermGroup>(t->group->degree(), gens)));
  }
  for (size_t i = 0; i < gt.size(); i++) {
    if (gt.degree(i) == 1) continue;
    bool found = false;
    for (const auto& ht : tables) {
      if (found) break;
      if (ht->order() == t->order()) continue;
      if (Int(static_cast<unsigned long>(t->order() / ht->order())) != gt.degree(i)) continue;
      CharacterTable hc = character_table(ht);
      for (size_t li = 0; li < hc.size() && !found; li++) {
        if (hc.degree(li) != 1) continue;
        bool eq = true;
        for (size_t k = 0; k < t->num_classes() && eq; k++)
          eq = induced_value_by_cosets(*t, *ht, hc.irreducibles[li], k) ==
               gt.irreducibles[i].values[k];
        found = eq;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::shared_ptr<const ClassTable> a5_classes() {
  return classes_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
}

std::shared_ptr<const ClassTable> s4_classes() {
  return classes_of(4, {"(1,2)", "(1,2,3,4)"});
}

// 2x2 determinant-one matrices over the field with three elements, acting
// on the eight nonzero vectors
std::shared_ptr<const ClassTable> sl23_classes() {
  return classes_of(8, {"(1,3,2,6)(4,5,8,7)", "(3,4,5)(6,8,7)"});
}

// Moebius action on the projective line over the field with seven elements
std::shared_ptr<const ClassTable> l27_classes() {
  return classes_of(8, {"(2,3,4,5,6,7,8)", "(1,2)(3,8)(4,5)(6,7)"});
}

}  // namespace

TEST_CASE("witness search on the alternating group of degree five") {
  auto t = a5_classes();
  CharacterTable gt = character_table(t);
  auto maxes = enumerated_maximals(t);
  REQUIRE(maxes.size() == 3);
  CHECK(maxes[0].group->order() == 12);
  CHECK(maxes[1].group->order() == 10);
  CHECK(maxes[2].group->order() == 6);
  REQUIRE(total_pairs(maxes) == 11);  // 4 + 4 + 3 irreducibles

  // degrees come out ascending: 1, 3, 3, 4, 5
  REQUIRE(gt.degree(3) == 4);
  REQUIRE(gt.degree(4) == 5);

  // the degree-5 character is induced with multiplier one from a nontrivial
  // linear character of the index-5 subgroup
  MiSearch st = find_mi_witness(gt, 4, maxes);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->subgroup == 0);
  CHECK(st.witness->subgroup_order == 12);
  CHECK(st.witness->lambda_degree == 1);
  CHECK(st.witness->m == 1);
  CHECK(st.witness->lambda != maxes[0].chars->trivial_index());
  CHECK(st.trace.back().fate == CandidateFate::kWitness);
  check_witness_exactly(gt, 4, *st.witness, maxes);

  // the degree-4 character admits no witness: every candidate pair already
  // fails the degree relations
  MiSearch s4 = find_mi_witness(gt, 3, maxes);
  CHECK(!s4.witness.has_value());
  CHECK(s4.trace.size() == 11);
  auto n4 = fate_counts(s4.trace);
  CHECK(n4[CandidateFate::kArithmetic] == 11);

  // each degree-3 character survives the screen only at the two linear
  // characters of the dihedral subgroup, and both fail the exact test
  for (size_t chi : {size_t(1), size_t(2)}) {
    REQUIRE(gt.degree(chi) == 3);
    MiSearch s3 = find_mi_witness(gt, chi, maxes);
    CHECK(!s3.witness.has_value());
    CHECK(s3.trace.size() == 11);
    auto n3 = fate_counts(s3.trace);
    CHECK(n3[CandidateFate::kArithmetic] == 9);
    CHECK(n3[CandidateFate::kInductionMismatch] == 2);
    for (const auto& tr : s3.trace)
      if (tr.fate == CandidateFate::kInductionMismatch) CHECK(tr.subgroup == 1);
  }
}

TEST_CASE("witnesses satisfy the degree relations and the coset-sum formula") {
  std::vector<std::shared_ptr<const ClassTable>> groups = {
      s4_classes(),
      classes_of(5, {"(1,2)", "(1,2,3,4,5)"}),  // symmetric group of degree 5
      sl23_classes(),
      classes_of(8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}),  // quaternion group
      classes_of(4, {"(1,2,3,4)", "(1,3)"}),                        // dihedral of order 8
  };
  for (const auto& t : groups) {
    CharacterTable gt = character_table(t);
    auto maxes = enumerated_maximals(t);
    for (size_t i = 0; i < gt.size(); i++) {
      if (gt.degree(i) == 1) continue;
      MiSearch a = find_mi_witness(gt, i, maxes);
      MiSearch b = find_mi_witness(gt, i, maxes);
      CHECK(a.witness.has_value() == b.witness.has_value());
      REQUIRE(a.trace.size() == b.trace.size());
      for (size_t k = 0; k < a.trace.size(); k++) {
        CHECK(a.trace[k].subgroup == b.trace[k].subgroup);
        CHECK(a.trace[k].lambda == b.trace[k].lambda);
        CHECK(a.trace[k].fate == b.trace[k].fate);
      }
      if (a.witness) {
        CHECK(a.witness->m == b.witness->m);
        check_witness_exactly(gt, i, *a.witness, maxes);
      } else {
        CHECK(a.trace.size() == total_pairs(maxes));
      }
    }
  }
}

TEST_CASE("witness verdicts for the simple group of order 168") {
  auto t = l27_classes();
  REQUIRE(t->order() == 168);
  CharacterTable gt = character_table(t);
  auto maxes = enumerated_maximals(t);
  REQUIRE(maxes.size() == 3);
  CHECK(maxes[0].group->order() == 24);
  CHECK(maxes[1].group->order() == 24);
  CHECK(maxes[2].group->order() == 21);

  // degrees ascending: 1, 3, 3, 6, 7, 8
  REQUIRE(gt.degree(3) == 6);
  REQUIRE(gt.degree(4) == 7);
  REQUIRE(gt.degree(5) == 8);

  // degree 7: induced from a nontrivial linear character of an index-7
  // subgroup of order 24, with multiplier one
  MiSearch s7 = find_mi_witness(gt, 4, maxes);
  REQUIRE(s7.witness.has_value());
  CHECK(s7.witness->subgroup_order == 24);
  CHECK(s7.witness->lambda_degree == 1);
  CHECK(s7.witness->m == 1);
  CHECK(s7.witness->lambda != maxes[s7.witness->subgroup].chars->trivial_index());
  check_witness_exactly(gt, 4, *s7.witness, maxes);

  // degree 8: induced from a nontrivial linear character of the subgroup of
  // order 21
  MiSearch s8 = find_mi_witness(gt, 5, maxes);
  REQUIRE(s8.witness.has_value());
  CHECK(s8.witness->subgroup == 2);
  CHECK(s8.witness->subgroup_order == 21);
  CHECK(s8.witness->lambda_degree == 1);
  CHECK(s8.witness->m == 1);
  CHECK(s8.witness->lambda != maxes[2].chars->trivial_index());
  check_witness_exactly(gt, 5, *s8.witness, maxes);

  // degree 6: no witness, and every maximal subgroup leaves a class where
  // the character is nonzero without any fused preimage
  MiSearch s6 = find_mi_witness(gt, 3, maxes);
  CHECK(!s6.witness.has_value());
  CHECK(s6.trace.size() == total_pairs(maxes));
  for (const auto& s : maxes) {
    auto gap = fusion_gap_check(gt.irreducibles[3], s.fusion);
    REQUIRE(!gap.empty());
    std::set<uint64_t> orders;
    for (uint32_t c : gap) orders.insert(t->rep_orders[c]);
    if (s.group->order() == 24) CHECK(orders == std::set<uint64_t>{7});
    if (s.group->order() == 21) CHECK(orders == std::set<uint64_t>{2});
  }
  // the degree-8 character vanishes on the classes its witness subgroup
  // misses, so there is no gap there
  CHECK(fusion_gap_check(gt.irreducibles[5], maxes[2].fusion).empty());

  // neither degree-3 character has a witness
  CHECK(!find_mi_witness(gt, 1, maxes).witness.has_value());
  CHECK(!find_mi_witness(gt, 2, maxes).witness.has_value());
}

TEST_CASE("maximal-only search agrees with the full lattice search") {
  for (const auto& t : {s4_classes(), sl23_classes(), a5_classes()}) {
    CharacterTable gt = character_table(t);
    auto maxes = enumerated_maximals(t);
    auto all = all_proper_subgroups(t);
    for (size_t i = 0; i < gt.size(); i++) {
      if (gt.degree(i) == 1) continue;
      CHECK(find_mi_witness(gt, i, maxes).witness.has_value() ==
            find_mi_witness(gt, i, all).witness.has_value());
    }
  }
}

TEST_CASE("group-level reports") {
  auto s4 = s4_classes();
  CharacterTable gt = character_table(s4);
  auto maxes = enumerated_maximals(s4);
  MiReport r = mi_group_report("S4", gt, maxes, SubgroupTier::kEnumerated);
  CHECK(r.group == "S4");
  CHECK(r.tier == SubgroupTier::kEnumerated);
  CHECK(r.subgroup_names == std::vector<std::string>{"M1", "M2", "M3"});
  CHECK(r.mi_group);
  CHECK(r.solvable);
  REQUIRE(r.m_group.has_value());
  CHECK(*r.m_group);
  REQUIRE(r.characters.size() == 5);
  for (const auto& cr : r.characters) {
    if (cr.degree == 1) {
      CHECK(cr.verdict == CharVerdict::kLinear);
      CHECK(!cr.witness.has_value());
    } else {
      CHECK(cr.verdict == CharVerdict::kMi);
      REQUIRE(cr.witness.has_value());
      CHECK(cr.witness->m == 1);
      CHECK(cr.trace.back().fate == CandidateFate::kWitness);
    }
    if (cr.degree == 3) CHECK(cr.witness->subgroup_order == 8);
    if (cr.degree == 2) CHECK(cr.witness->subgroup_order == 12);
  }

  auto a5 = a5_classes();
  CharacterTable ga = character_table(a5);
  MiReport ra = mi_group_report("A5", ga, enumerated_maximals(a5), SubgroupTier::kEnumerated);
  CHECK(!ra.mi_group);
  CHECK(!ra.solvable);
  REQUIRE(ra.m_group.has_value());
  CHECK(!*ra.m_group);
  std::vector<CharVerdict> verdicts;
  for (const auto& cr : ra.characters) verdicts.push_back(cr.verdict);
  CHECK(verdicts == std::vector<CharVerdict>{CharVerdict::kLinear, CharVerdict::kNotMi,
                                             CharVerdict::kNotMi, CharVerdict::kNotMi,
                                             CharVerdict::kMi});

  // the binary extraspecial-like counterexample: solvable but neither an
  // M-group nor with witnesses for its three degree-2 characters
  auto sl = sl23_classes();
  REQUIRE(sl->order() == 24);
  CharacterTable gs = character_table(sl);
  MiReport rs = mi_group_report("SL23", gs, enumerated_maximals(sl), SubgroupTier::kEnumerated);
  CHECK(!rs.mi_group);
  CHECK(rs.solvable);
  REQUIRE(rs.m_group.has_value());
  CHECK(!*rs.m_group);
  for (const auto& cr : rs.characters) {
    if (cr.degree == 2) CHECK(cr.verdict == CharVerdict::kNotMi);
    if (cr.degree == 3) CHECK(cr.verdict == CharVerdict::kMi);
  }

  // the quaternion group has witnesses everywhere
  auto q8 = classes_of(8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"});
  CharacterTable gq = character_table(q8);
  MiReport rq = mi_group_report("Q8", gq, enumerated_maximals(q8), SubgroupTier::kEnumerated);
  CHECK(rq.mi_group);
  CHECK(rq.solvable);
  CHECK(*rq.m_group);

  // abelian groups pass vacuously, even with an empty subgroup list
  auto c6 = classes_of(6, {"(1,2,3,4,5,6)"});
  CharacterTable gc = character_table(c6);
  MiReport rc = mi_group_report("C6", gc, {}, SubgroupTier::kEnumerated);
  CHECK(rc.mi_group);
  for (const auto& cr : rc.characters) CHECK(cr.verdict == CharVerdict::kLinear);

  // a nonlinear character with no subgroup list is an input error
  CHECK_THROWS_AS(mi_group_report("S4", gt, {}, SubgroupTier::kEnumerated), NoSubgroupData);
}

TEST_CASE("relative reports restrict to characters not factoring through the quotient") {
  auto s4 = s4_classes();
  CharacterTable gt = character_table(s4);
  auto maxes = enumerated_maximals(s4);
  auto normals = normal_subgroups(s4);
  REQUIRE(normals.size() == 4);  // 1, V4, A4, S4

  MiReport full = mi_group_report("S4", gt, maxes, SubgroupTier::kEnumerated);

  // trivial normal subgroup: everything is excluded, vacuous pass
  MiReport r1 = mi_relative_report("S4", gt, normals[0], maxes, SubgroupTier::kEnumerated);
  CHECK(r1.mi_group);
  for (const auto& cr : r1.characters)
    CHECK(cr.verdict == (cr.degree == 1 ? CharVerdict::kLinear : CharVerdict::kExcluded));

  // the Klein subgroup kills exactly the degree-2 character, which is
  // inflated from the quotient symmetric group of degree 3
  MiReport r2 = mi_relative_report("S4", gt, normals[1], maxes, SubgroupTier::kEnumerated);
  CHECK(r2.mi_group);
  for (const auto& cr : r2.characters) {
    if (cr.degree == 2) CHECK(cr.verdict == CharVerdict::kExcluded);
    if (cr.degree == 3) CHECK(cr.verdict == CharVerdict::kMi);
  }

  // relative to the derived subgroup the test covers all nonlinear
  // characters, and relative to the whole group likewise
  for (size_t ni : {size_t(2), size_t(3)}) {
    MiReport r = mi_relative_report("S4", gt, normals[ni], maxes, SubgroupTier::kEnumerated);
    REQUIRE(r.characters.size() == full.characters.size());
    for (size_t i = 0; i < r.characters.size(); i++)
      CHECK(r.characters[i].verdict == full.characters[i].verdict);
    CHECK(r.mi_group == full.mi_group);
  }

  // the degree-four characters of the symmetric group of degree 5 have no
  // witness, so the test relative to its simple normal subgroup fails
  auto s5 = classes_of(5, {"(1,2)", "(1,2,3,4,5)"});
  CharacterTable g5 = character_table(s5);
  auto maxes5 = enumerated_maximals(s5);
  auto normals5 = normal_subgroups(s5);
  REQUIRE(normals5.size() == 3);
  REQUIRE(normals5[1].order == 60);
  MiReport r5 = mi_relative_report("S5", g5, normals5[1], maxes5, SubgroupTier::kEnumerated);
  CHECK(!r5.mi_group);
  for (const auto& cr : r5.characters) {
    CHECK(cr.verdict != CharVerdict::kExcluded);  // only linear quotient characters
    if (cr.degree == 4) CHECK(cr.verdict == CharVerdict::kNotMi);
    if (cr.degree == 6) {
      CHECK(cr.verdict == CharVerdict::kMi);
      REQUIRE(cr.witness.has_value());
      CHECK(cr.witness->subgroup_order == 60);
      CHECK(cr.witness->lambda_degree == 3);
      CHECK(cr.witness->m == 1);
      check_witness_exactly(g5, cr.chi, *cr.witness, maxes5);
    }
  }

  // non-normal subgroups are rejected
  NormalSubgroup fake{*group_of(4, {"(1,2)", "(1,2,3)"}), 6, {}};
  CHECK_THROWS_AS(mi_relative_report("S4", gt, fake, maxes, SubgroupTier::kEnumerated), NotNormal);
}

TEST_CASE("monomiality test agrees with the brute-force search") {
  struct Case {
    std::shared_ptr<const ClassTable> t;
    bool expected;
  };
  std::vector<Case> cases = {
      {s4_classes(), true},
      {classes_of(4, {"(1,2,3)", "(1,2)(3,4)"}), true},              // alternating, degree 4
      {classes_of(4, {"(1,2,3,4)", "(1,3)"}), true},                 // dihedral of order 8
      {classes_of(8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}), true},  // quaternion
      {classes_of(6, {"(1,2,3,4,5,6)"}), true},
      {sl23_classes(), false},
      {a5_classes(), false},
  };
  for (const auto& c : cases) {
    CHECK(is_m_group(c.t) == c.expected);
    CHECK(brute_m_group(c.t) == c.expected);
  }
  auto a7 = classes_of(7, {"(1,2,3,4,5,6,7)", "(1,2,3)"});
  CHECK_THROWS_AS(is_m_group(a7), CapExceeded);
}

TEST_CASE("steinberg screen evaluates the three necessary conditions") {
  auto t = a5_classes();
  CharacterTable gt = character_table(t);
  REQUIRE(gt.degree(4) == 5);  // the characteristic-5 Steinberg degree: 60 = 5 * 12

  // index-5 subgroup, nontrivial linear, multiplier 1: all three conditions
  // hold and a witness exists
  auto a4 = prepare_subgroups(t, {{"A4", group_of(5, {"(1,2,3)", "(1,2)(3,4)"})}});
  const SubgroupData& h4 = a4[0];
  size_t lin = h4.chars->trivial_index() == 0 ? 1 : 0;
  REQUIRE(h4.chars->degree(lin) == 1);
  SteinbergReport ok = steinberg_checks(h4.fusion, h4.chars->irreducibles[lin], 1, 5);
  CHECK(ok.semisimple_fusion);
  CHECK(ok.multiplier_p_parts);
  CHECK(ok.index_bounds);
  CHECK(ok.all_pass());
  CHECK(ok.missed_classes.empty());
  CHECK(find_mi_witness(gt, 4, a4).witness.has_value());

  // the order-6 subgroup passes the whole screen with multiplier 2, yet the
  // exact test refutes every candidate: the screen is not sufficient
  auto s3 = prepare_subgroups(t, {{"S3", group_of(5, {"(1,2,3)", "(1,2)(4,5)"})}});
  REQUIRE(s3[0].group->order() == 6);
  SteinbergReport sc = steinberg_checks(s3[0].fusion,
                                        s3[0].chars->irreducibles[s3[0].chars->trivial_index()],
                                        2, 5);
  CHECK(sc.all_pass());
  MiSearch ms = find_mi_witness(gt, 4, s3);
  CHECK(!ms.witness.has_value());
  auto n = fate_counts(ms.trace);
  CHECK(n[CandidateFate::kInductionMismatch] == 2);
  CHECK(n[CandidateFate::kArithmetic] == 1);

  // a cyclic subgroup of order 5 fails all three conditions at once
  auto c5 = prepare_subgroups(t, {{"C5", group_of(5, {"(1,2,3,4,5)"})}});
  SteinbergReport bad = steinberg_checks(c5[0].fusion,
                                         c5[0].chars->irreducibles[c5[0].chars->trivial_index()],
                                         5, 5);
  CHECK(!bad.semisimple_fusion);
  CHECK(!bad.multiplier_p_parts);
  CHECK(!bad.index_bounds);
  std::set<uint64_t> missed;
  for (uint32_t c : bad.missed_classes) missed.insert(t->rep_orders[c]);
  CHECK(missed == std::set<uint64_t>{2, 3});

  // a linear character cannot carry the full 2-part of the subgroup order
  SteinbergReport odd = steinberg_checks(h4.fusion, h4.chars->irreducibles[lin], 1, 2);
  CHECK(!odd.multiplier_p_parts);
}

TEST_CASE("fusion gap of a group against itself is empty") {
  auto t = s4_classes();
  CharacterTable gt = character_table(t);
  FusionMap self = class_fusion(t, t);
  for (const auto& chi : gt.irreducibles) CHECK(fusion_gap_check(chi, self).empty());
  auto a5 = a5_classes();
  CharacterTable ga = character_table(a5);
  CHECK_THROWS_AS(fusion_gap_check(ga.irreducibles[0], self), InternalError);
}

TEST_CASE("prepared subgroups must be proper") {
  auto t = s4_classes();
  CHECK_THROWS_AS(prepare_subgroups(t, {{"self", t->group}}), NotSubgroup);
  CHECK_THROWS_AS(prepare_subgroups(t, {{"odd", group_of(4, {"(1,2)", "(1,2,3,4)", "(1,2)"})}}),
                  NotSubgroup);
  CHECK_THROWS_AS(prepare_subgroups(t, {{"other", group_of(5, {"(4,5)"})}}), NotSubgroup);
}

TEST_CASE("a subgroup whose nontrivial characters all induce to isotypic "
          "multiples has solvable normal closure") {
  Context ctx(load_corpus(default_corpus_path()), 3);
  size_t pairs = 0, held = 0;
  for (const CorpusGroup& g : ctx.corpus().groups) {
    const GroupBundle& b = ctx.bundle(g.name);
    std::vector<const SubgroupData*> subs;
    for (const SubgroupData& sd : b.maximals) subs.push_back(&sd);
    for (const SubgroupData& sd : b.extras) subs.push_back(&sd);
    for (const SubgroupData* sd : subs) {
      size_t trivial = sd->chars->trivial_index();
      bool hypothesis = true;
      for (size_t i = 0; i < sd->chars->size() && hypothesis; i++) {
        if (i == trivial) continue;
        ClassFunction ind = induce(sd->fusion, sd->chars->irreducibles[i]);
        bool multiple = false;
        for (const ClassFunction& chi : b.chars->irreducibles) {
          Rat c = inner_product(ind, chi);
          if (c == 0) continue;
          // a multiple of one irreducible has no other constituents, so the
          // first constituent found settles the question
          std::vector<CycValue> scaled;
          for (const CycValue& v : chi.values) scaled.push_back(v * c);
          multiple = (ind == ClassFunction{chi.table, scaled});
          break;
        }
        hypothesis = multiple;
      }
      pairs++;
      if (!hypothesis) continue;
      held++;
      CHECK(is_solvable(normal_closure(*b.group, sd->group->generators())));
    }
  }
  CHECK(pairs >= 58);
  // not vacuous: (S3, C3), (A4, V4) and (D10, C5) satisfy the hypothesis
  CHECK(held >= 3);
}
