#pragma once

#include <memory>
#include <vector>

#include "mig/class_function.hpp"

namespace mig {

// how the conjugacy classes of a subgroup fuse into those of the parent
struct FusionMap {
  std::shared_ptr<const ClassTable> sub;
  std::shared_ptr<const ClassTable> parent;
  std::vector<uint32_t> to_parent;  // subgroup class -> parent class
};

// throws NotSubgroup unless every subgroup element lies in the parent
FusionMap class_fusion(std::shared_ptr<const ClassTable> sub,
                       std::shared_ptr<const ClassTable> parent);

// induced class function, evaluated classwise:
//   lambda^G(g) = |C_G(g)| * sum over subgroup classes c fusing into g^G of
//                 lambda(c) / |C_H(c)|
ClassFunction induce(const FusionMap& f, const ClassFunction& lambda);

// restriction to the subgroup (fusion pullback)
ClassFunction restrict_to(const FusionMap& f, const ClassFunction& chi);

// representatives of the (u, w)-double cosets in g; each representative is
// the first element of its double coset in enumeration order
std::vector<Perm> double_cosets(std::shared_ptr<const PermGroup> g, const PermGroup& u,
                                const PermGroup& w, uint64_t cap = kEnumerationCap);

// Mackey's subgroup formula for lambda on u:
//   (lambda^G) restricted to w  =  sum over (u, w)-double coset reps r of
//   ((lambda conjugated by r) restricted to (u^r meet w)) induced to w
// returns true when both sides agree exactly
bool mackey_check(std::shared_ptr<const ClassTable> g_t, std::shared_ptr<const ClassTable> u_t,
                  std::shared_ptr<const ClassTable> w_t, const ClassFunction& lambda,
                  uint64_t cap = kEnumerationCap);

}  // namespace mig
