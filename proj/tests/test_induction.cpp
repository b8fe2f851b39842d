#include "doctest.h"

#include <memory>
#include <vector>

#include "mig/char_table.hpp"
#include "mig/errors.hpp"
#include "mig/induction.hpp"
#include "test_support.hpp"

using namespace mig;
using mig::test::classes_of;
using mig::test::group_of;

namespace {

// oracle: lambda^G(g) = (1/|H|) sum over all x in G of lambda0(x g x^-1),
// where lambda0 vanishes off H.  evaluated literally over the enumeration
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

}  // namespace

TEST_CASE("fusion rejects non-subgroups") {
  auto a5 = classes_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
  CHECK_THROWS_AS(class_fusion(classes_of(5, {"(4,5)"}), a5), NotSubgroup);
  CHECK_THROWS_AS(class_fusion(classes_of(4, {"(1,2)"}), a5), NotSubgroup);
}

TEST_CASE("induction from S3 to S4 matches the coset-sum formula") {
  auto gt = classes_of(4, {"(1,2)", "(1,2,3,4)"});
  auto ht = classes_of(4, {"(1,2)", "(1,2,3)"});  // point stabilizer of 4
  FusionMap f = class_fusion(ht, gt);
  auto irr_h = character_table(ht);
  uint64_t index = gt->order() / ht->order();
  for (const auto& lam : irr_h.irreducibles) {
    ClassFunction ind = induce(f, lam);
    CHECK(ind.degree() == lam.degree() * Int(index));
    for (size_t k = 0; k < gt->num_classes(); k++)
      CHECK(ind.values[k] == induced_value_by_cosets(*gt, *ht, lam, k));
  }
}

TEST_CASE("induction from A4 to A5 matches the coset-sum formula") {
  auto gt = classes_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto ht = classes_of(5, {"(1,2,3)", "(1,2)(3,4)"});
  FusionMap f = class_fusion(ht, gt);
  auto irr_h = character_table(ht);
  for (const auto& lam : irr_h.irreducibles) {
    ClassFunction ind = induce(f, lam);
    for (size_t k = 0; k < gt->num_classes(); k++)
      CHECK(ind.values[k] == induced_value_by_cosets(*gt, *ht, lam, k));
  }
}

TEST_CASE("Frobenius reciprocity") {
  auto gt = classes_of(4, {"(1,2)", "(1,2,3,4)"});
  auto ht = classes_of(4, {"(1,2)", "(1,2,3)"});
  FusionMap f = class_fusion(ht, gt);
  auto irr_g = character_table(gt);
  auto irr_h = character_table(ht);
  for (const auto& lam : irr_h.irreducibles)
    for (const auto& chi : irr_g.irreducibles) {
      Rat lhs = inner_product(induce(f, lam), chi);
      Rat rhs = inner_product(lam, restrict_to(f, chi));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("induction is transitive through a chain") {
  auto gt = classes_of(4, {"(1,2)", "(1,2,3,4)"});
  auto kt = classes_of(4, {"(1,2)", "(1,2,3)"});
  auto ht = classes_of(4, {"(1,2)"});
  FusionMap h_in_k = class_fusion(ht, kt);
  FusionMap k_in_g = class_fusion(kt, gt);
  FusionMap h_in_g = class_fusion(ht, gt);
  for (const auto& lam : character_table(ht).irreducibles) {
    ClassFunction direct = induce(h_in_g, lam);
    ClassFunction stepped = induce(k_in_g, induce(h_in_k, lam));
    CHECK(direct.values == stepped.values);
  }
}

TEST_CASE("permutation character of the natural action") {
  // inducing the trivial character of a point stabilizer gives the
  // permutation character, which for A5 on 5 points is trivial + degree 4
  auto gt = classes_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto ht = classes_of(5, {"(1,2,3)", "(1,2)(3,4)"});
  ClassFunction ind = induce(class_fusion(ht, gt), trivial_character(ht));
  auto irr_g = character_table(gt);
  for (const auto& chi : irr_g.irreducibles) {
    Rat mult = inner_product(ind, chi);
    bool expected_one = (chi.degree() == 1 || chi.degree() == 4);
    CHECK(mult == Rat(expected_one ? 1 : 0));
  }
  // pointwise: the permutation character counts fixed points
  for (size_t k = 0; k < gt->num_classes(); k++) {
    long fixed = gt->rep(k).fixed_points();
    CHECK(ind.values[k] == CycValue::from_int(fixed));
  }
}

TEST_CASE("double coset representatives") {
  auto s4 = group_of(4, {"(1,2)", "(1,2,3,4)"});
  auto s3 = group_of(4, {"(1,2)", "(1,2,3)"});
  auto reps = double_cosets(s4, *s3, *s3);
  CHECK(reps.size() == 2);  // S3\S4/S3 has sizes 6 + 18
  CHECK(reps[0].is_identity());

  auto a5 = group_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto a4 = group_of(5, {"(1,2,3)", "(1,2)(3,4)"});
  auto c5 = group_of(5, {"(1,2,3,4,5)"});
  CHECK(double_cosets(a5, *a4, *c5).size() == 1);  // A4 C5 = A5
}

TEST_CASE("Mackey's subgroup formula holds on assorted triples") {
  auto s4 = classes_of(4, {"(1,2)", "(1,2,3,4)"});
  auto s3 = classes_of(4, {"(1,2)", "(1,2,3)"});
  auto v4 = classes_of(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto d8 = classes_of(4, {"(1,2,3,4)", "(1,3)"});
  for (const auto& lam : character_table(s3).irreducibles) {
    CHECK(mackey_check(s4, s3, v4, lam));
    CHECK(mackey_check(s4, s3, d8, lam));
  }
  for (const auto& lam : character_table(d8).irreducibles)
    CHECK(mackey_check(s4, d8, s3, lam));

  auto a5 = classes_of(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto a4 = classes_of(5, {"(1,2,3)", "(1,2)(3,4)"});
  auto c5 = classes_of(5, {"(1,2,3,4,5)"});
  for (const auto& lam : character_table(a4).irreducibles) {
    CHECK(mackey_check(a5, a4, c5, lam));
    CHECK(mackey_check(a5, a4, a4, lam));
  }
}
