#include "doctest.h"

#include <set>

#include "mig/class_table.hpp"

using namespace mig;

namespace {

std::shared_ptr<const PermGroup> make(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> v;
  for (const char* s : gens) v.push_back(Perm::parse(degree, s));
  return std::make_shared<PermGroup>(degree, v);
}

std::multiset<uint64_t> size_multiset(const ClassTable& t) {
  return {t.sizes.begin(), t.sizes.end()};
}

}  // namespace

TEST_CASE("class sizes against per-element brute force") {
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  auto t = conjugacy_classes(s4);
  CHECK(t->num_classes() == 5);
  CHECK(size_multiset(*t) == std::multiset<uint64_t>{1, 3, 6, 6, 8});

  // oracle: orbit of each element under conjugation by all elements
  const auto& elems = t->elems->elements;
  for (uint32_t x = 0; x < elems.size(); x++) {
    std::set<Perm> orbit;
    for (const Perm& g : elems) orbit.insert(elems[x].conjugated_by(g));
    CHECK(orbit.size() == t->sizes[t->class_of[x]]);
    for (const Perm& y : orbit) CHECK(t->class_of_element(y) == t->class_of[x]);
  }
}

TEST_CASE("A5 classes") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(3,4,5)"});
  auto t = conjugacy_classes(a5);
  CHECK(t->num_classes() == 5);
  CHECK(size_multiset(*t) == std::multiset<uint64_t>{1, 15, 20, 12, 12});
  // sorted by element order: 1, 2, 3, 5, 5
  CHECK(t->rep_orders == std::vector<uint64_t>{1, 2, 3, 5, 5});
  CHECK(t->sizes == std::vector<uint64_t>{1, 15, 20, 12, 12});
  CHECK(t->exponent == 30);
  CHECK(t->label(3) == "5A");
  CHECK(t->label(4) == "5B");
  uint64_t total = 0;
  for (uint64_t s : t->sizes) total += s;
  CHECK(total == 60);
}

TEST_CASE("identity class is class 0 and centralizer orders multiply back") {
  auto a4 = make(4, {"(1,2,3)", "(1,2)(3,4)"});
  auto t = conjugacy_classes(a4);
  CHECK(t->rep(0).is_identity());
  CHECK(t->sizes[0] == 1);
  for (size_t c = 0; c < t->num_classes(); c++)
    CHECK(t->sizes[c] * t->centralizer_orders[c] == 12);
}

TEST_CASE("power maps") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(3,4,5)"});
  auto t = conjugacy_classes(a5);
  // k = 0 maps everything to the identity class
  for (size_t c = 0; c < t->num_classes(); c++) CHECK(t->power_maps[0][c] == 0);
  // k = 1 is the identity map on classes
  for (size_t c = 0; c < t->num_classes(); c++) CHECK(t->power_maps[1][c] == c);
  // the two classes of 5-elements are swapped by squaring
  CHECK(t->power_maps[2][3] == 4);
  CHECK(t->power_maps[2][4] == 3);
  // inverse class: all classes of A5 are real
  for (size_t c = 0; c < t->num_classes(); c++) CHECK(t->inverse_class(c) == c);

  // composition: rep^(k*l) lands in the class of (rep^k)^l
  for (uint64_t k = 0; k < t->exponent; k++)
    for (uint64_t l = 0; l < t->exponent; l++)
      for (size_t c = 0; c < t->num_classes(); c++)
        CHECK(t->power_maps[(k * l) % t->exponent][c] == t->power_maps[k][t->power_maps[l][c]]);
}

TEST_CASE("non-real classes pair up under inversion") {
  // C7 : order 7 cyclic, classes of g and g^-1 differ
  auto c7 = make(7, {"(1,2,3,4,5,6,7)"});
  auto t = conjugacy_classes(c7);
  CHECK(t->num_classes() == 7);
  int self_paired = 0;
  for (size_t c = 0; c < t->num_classes(); c++) {
    CHECK(t->inverse_class(t->inverse_class(c)) == c);
    if (t->inverse_class(c) == c) self_paired++;
  }
  CHECK(self_paired == 1);  // only the identity
}

TEST_CASE("S3 class multiplication coefficients by brute double loop") {
  auto s3 = make(3, {"(1,2,3)", "(1,2)"});
  auto t = conjugacy_classes(s3);
  REQUIRE(t->num_classes() == 3);
  // classes: 0 = identity, 1 = transpositions (order 2, size 3), 2 = 3-cycles
  CHECK(t->sizes == std::vector<uint64_t>{1, 3, 2});

  // oracle: full double loop over C_i x C_j counting products landing on rep(k)
  const auto& elems = t->elems->elements;
  auto brute = [&](size_t i, size_t j, size_t k) {
    uint64_t a = 0;
    for (uint32_t x : t->members[i])
      for (uint32_t y : t->members[j])
        if (elems[x] * elems[y] == t->rep(k)) a++;
    return a;
  };
  CHECK(class_mult_coefficient(*t, 1, 1, 2) == 3);
  CHECK(brute(1, 1, 2) == 3);

  auto tensor = class_mult_tensor(*t);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++)
      for (size_t k = 0; k < 3; k++) {
        CHECK(tensor[i][j][k] == brute(i, j, k));
        CHECK(tensor[i][j][k] == class_mult_coefficient(*t, i, j, k));
      }
}

TEST_CASE("tensor row sums: sum_k a_ijk |C_k| = |C_i| |C_j|") {
  for (auto g : {make(4, {"(1,2,3,4)", "(1,2)"}), make(5, {"(1,2,3,4,5)", "(3,4,5)"}),
                 make(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"})}) {
    auto t = conjugacy_classes(g);
    auto a = class_mult_tensor(*t);
    size_t r = t->num_classes();
    for (size_t i = 0; i < r; i++)
      for (size_t j = 0; j < r; j++) {
        uint64_t sum = 0;
        for (size_t k = 0; k < r; k++) sum += a[i][j][k] * t->sizes[k];
        CHECK(sum == t->sizes[i] * t->sizes[j]);
      }
  }
}

TEST_CASE("a_{i,i^-1,identity} equals the class size") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(3,4,5)"});
  auto t = conjugacy_classes(a5);
  auto a = class_mult_tensor(*t);
  for (size_t i = 0; i < t->num_classes(); i++)
    CHECK(a[i][t->inverse_class(i)][0] == t->sizes[i]);
}

TEST_CASE("tensor is parallelism independent") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(3,4,5)"});
  auto t = conjugacy_classes(a5);
  CHECK(class_mult_tensor(*t, 1) == class_mult_tensor(*t, 4));
}
