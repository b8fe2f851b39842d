#ifndef MIG_CLASS_TABLE_HPP
#define MIG_CLASS_TABLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mig/perm_group.hpp"

namespace mig {

// conjugacy class data for a fully enumerated group.
// classes are sorted by (element order, class size, first-discovery index),
// so class 0 is always the identity class and labels are stable across runs.
struct ClassTable {
  std::shared_ptr<const PermGroup> group;
  std::shared_ptr<const Enumeration> elems;

  std::vector<uint32_t> class_of;          // element index -> class id
  std::vector<uint32_t> rep_index;         // class id -> element index of representative
  std::vector<uint64_t> sizes;             // class id -> |C|
  std::vector<uint64_t> centralizer_orders;// |G| / |C|
  std::vector<uint64_t> rep_orders;        // element order of the representative
  std::vector<std::vector<uint32_t>> members;  // class id -> element indices (ascending)
  uint64_t exponent = 1;                   // lcm of element orders
  // power_maps[k][c] = class of rep_c^k, for k in [0, exponent)
  std::vector<std::vector<uint32_t>> power_maps;

  size_t num_classes() const { return sizes.size(); }
  uint64_t order() const { return elems->size(); }
  const Perm& rep(size_t c) const { return elems->elements[rep_index[c]]; }
  uint32_t class_of_element(const Perm& p) const { return class_of[elems->index_of(p)]; }
  uint32_t inverse_class(size_t c) const {
    return power_maps[exponent - 1][c];  // g^(e-1) = g^-1
  }
  // ATLAS-style label: element order + letter by table position, e.g. "8A"
  std::string label(size_t c) const;
};

std::shared_ptr<const ClassTable> conjugacy_classes(std::shared_ptr<const PermGroup> g,
                                                    uint64_t cap = kEnumerationCap);

// number of (x, y) in C_i x C_j with x*y = rep(k); computed by iterating x
// over C_i and testing x^-1 * rep(k) against C_j
uint64_t class_mult_coefficient(const ClassTable& t, size_t i, size_t j, size_t k);

// full coefficient tensor, indexed [i][j][k]
std::vector<std::vector<std::vector<uint64_t>>> class_mult_tensor(const ClassTable& t, int jobs = 1);

uint64_t group_exponent(const ClassTable& t);

}  // namespace mig

#endif  // MIG_CLASS_TABLE_HPP
