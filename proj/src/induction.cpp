#include "mig/induction.hpp"

#include <utility>

#include "mig/errors.hpp"

namespace mig {

FusionMap class_fusion(std::shared_ptr<const ClassTable> sub,
                       std::shared_ptr<const ClassTable> parent) {
  FusionMap f{sub, parent, {}};
  f.to_parent.reserve(sub->num_classes());
  for (size_t c = 0; c < sub->num_classes(); c++) {
    try {
      f.to_parent.push_back(parent->class_of_element(sub->rep(c)));
    } catch (const NotInGroup&) {
      throw NotSubgroup("class representative does not lie in the parent group");
    }
  }
  return f;
}

ClassFunction induce(const FusionMap& f, const ClassFunction& lambda) {
  if (lambda.table != f.sub) throw InternalError("induce: function lives on a different table");
  const ClassTable& h = *f.sub;
  const ClassTable& g = *f.parent;
  ClassFunction out{f.parent, std::vector<CycValue>(g.num_classes())};
  for (size_t c = 0; c < h.num_classes(); c++) {
    uint32_t k = f.to_parent[c];
    Rat scale(g.centralizer_orders[k], h.centralizer_orders[c]);
    scale.canonicalize();
    out.values[k] = out.values[k] + lambda.values[c] * scale;
  }
  return out;
}

ClassFunction restrict_to(const FusionMap& f, const ClassFunction& chi) {
  if (chi.table != f.parent)
    throw InternalError("restrict: function lives on a different table");
  ClassFunction out{f.sub, {}};
  out.values.reserve(f.sub->num_classes());
  for (size_t c = 0; c < f.sub->num_classes(); c++)
    out.values.push_back(chi.values[f.to_parent[c]]);
  return out;
}

std::vector<Perm> double_cosets(std::shared_ptr<const PermGroup> g, const PermGroup& u,
                                const PermGroup& w, uint64_t cap) {
  auto en = g->enumerate(cap);
  size_t n = en->size();
  std::vector<char> seen(n, 0);
  std::vector<Perm> reps;
  for (size_t s = 0; s < n; s++) {
    if (seen[s]) continue;
    reps.push_back(en->elements[s]);
    std::vector<size_t> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      const Perm& px = en->elements[x];
      for (const Perm& a : u.generators()) {
        size_t y = en->index_of(a * px);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
      for (const Perm& b : w.generators()) {
        size_t y = en->index_of(px * b);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return reps;
}

bool mackey_check(std::shared_ptr<const ClassTable> g_t, std::shared_ptr<const ClassTable> u_t,
                  std::shared_ptr<const ClassTable> w_t, const ClassFunction& lambda,
                  uint64_t cap) {
  FusionMap fu = class_fusion(u_t, g_t);
  FusionMap fw = class_fusion(w_t, g_t);
  ClassFunction lhs = restrict_to(fw, induce(fu, lambda));

  std::vector<Perm> reps = double_cosets(g_t->group, *u_t->group, *w_t->group, cap);
  ClassFunction rhs{w_t, std::vector<CycValue>(w_t->num_classes())};
  for (const Perm& r : reps) {
    std::vector<Perm> cgens;
    for (const Perm& a : u_t->group->generators()) cgens.push_back(a.conjugated_by(r));
    PermGroup ur(g_t->group->degree(), cgens);

    // intersect u^r with w by scanning the smaller group
    std::vector<Perm> inter;
    const PermGroup& wg = *w_t->group;
    if (ur.order() <= wg.order()) {
      for (const Perm& x : ur.enumerate(cap)->elements)
        if (wg.contains(x)) inter.push_back(x);
    } else {
      for (const Perm& x : wg.enumerate(cap)->elements)
        if (ur.contains(x)) inter.push_back(x);
    }
    auto it = conjugacy_classes(
        std::make_shared<const PermGroup>(g_t->group->degree(), inter), cap);

    // lambda conjugated by r, evaluated on the intersection: x -> lambda(r x r^-1)
    ClassFunction lr{it, std::vector<CycValue>(it->num_classes())};
    Perm rinv = r.inverse();
    for (size_t c = 0; c < it->num_classes(); c++) {
      Perm back = it->rep(c).conjugated_by(rinv);
      lr.values[c] = lambda.values[u_t->class_of_element(back)];
    }
    rhs = rhs + induce(class_fusion(it, w_t), lr);
  }
  return lhs.values == rhs.values;
}

}  // namespace mig
