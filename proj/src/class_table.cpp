#include "mig/class_table.hpp"

#include <algorithm>
#include <numeric>

#include "mig/errors.hpp"
#include "mig/util.hpp"

namespace mig {

std::string ClassTable::label(size_t c) const {
  int nth = 0;
  for (size_t d = 0; d < c; d++)
    if (rep_orders[d] == rep_orders[c]) nth++;
  std::string letter;
  // A..Z, then AA, AB, ... (orders with >26 classes do not occur at this scale)
  if (nth < 26) {
    letter = std::string(1, static_cast<char>('A' + nth));
  } else {
    letter = std::string(1, static_cast<char>('A' + nth / 26 - 1)) +
             static_cast<char>('A' + nth % 26);
  }
  return std::to_string(rep_orders[c]) + letter;
}

std::shared_ptr<const ClassTable> conjugacy_classes(std::shared_ptr<const PermGroup> g,
                                                    uint64_t cap) {
  auto t = std::make_shared<ClassTable>();
  t->group = g;
  t->elems = g->enumerate(cap);
  const auto& elems = t->elems->elements;
  size_t n = elems.size();

  // conjugation BFS seeded from the first unclassified element, in
  // enumeration order; the seed is the class representative
  std::vector<uint32_t> cls(n, UINT32_MAX);
  std::vector<uint32_t> reps, seeds;
  std::vector<std::vector<uint32_t>> members;
  std::vector<uint32_t> stack;
  for (uint32_t seed = 0; seed < n; seed++) {
    if (cls[seed] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(reps.size());
    reps.push_back(seed);
    members.push_back({});
    cls[seed] = id;
    stack.assign(1, seed);
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (const Perm& gen : g->generators()) {
        uint32_t y = t->elems->index_of(elems[x].conjugated_by(gen));
        if (cls[y] == UINT32_MAX) {
          cls[y] = id;
          stack.push_back(y);
        }
      }
    }
  }

  size_t r = reps.size();
  // sort classes by (element order, size, discovery)
  std::vector<uint64_t> ord(r), size(r);
  for (size_t c = 0; c < r; c++) {
    ord[c] = elems[reps[c]].order();
    size[c] = members[c].size();
  }
  std::vector<size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (ord[a] != ord[b]) return ord[a] < ord[b];
    if (size[a] != size[b]) return size[a] < size[b];
    return a < b;
  });

  std::vector<uint32_t> new_id(r);
  for (size_t c = 0; c < r; c++) new_id[perm[c]] = static_cast<uint32_t>(c);
  t->class_of.resize(n);
  for (size_t i = 0; i < n; i++) t->class_of[i] = new_id[cls[i]];
  t->rep_index.resize(r);
  t->sizes.resize(r);
  t->rep_orders.resize(r);
  t->members.resize(r);
  t->centralizer_orders.resize(r);
  for (size_t c = 0; c < r; c++) {
    size_t o = perm[c];
    t->rep_index[c] = reps[o];
    t->sizes[c] = size[o];
    t->rep_orders[c] = ord[o];
    t->members[c] = std::move(members[o]);
    std::sort(t->members[c].begin(), t->members[c].end());
    t->centralizer_orders[c] = n / size[o];
  }

  t->exponent = 1;
  for (size_t c = 0; c < r; c++) t->exponent = std::lcm(t->exponent, t->rep_orders[c]);

  t->power_maps.assign(t->exponent, std::vector<uint32_t>(r));
  for (size_t c = 0; c < r; c++) {
    Perm cur = Perm::identity(g->degree());
    const Perm& rep = elems[t->rep_index[c]];
    for (uint64_t k = 0; k < t->exponent; k++) {
      t->power_maps[k][c] = t->class_of[t->elems->index_of(cur)];
      cur = cur * rep;
    }
  }
  return t;
}

uint64_t class_mult_coefficient(const ClassTable& t, size_t i, size_t j, size_t k) {
  const auto& elems = t.elems->elements;
  const Perm& zk = t.rep(k);
  uint64_t a = 0;
  for (uint32_t xi : t.members[i]) {
    Perm y = elems[xi].inverse() * zk;
    if (t.class_of[t.elems->index_of(y)] == j) a++;
  }
  return a;
}

std::vector<std::vector<std::vector<uint64_t>>> class_mult_tensor(const ClassTable& t, int jobs) {
  size_t r = t.num_classes();
  const auto& elems = t.elems->elements;
  // precompute inverse indices once; the k-loop then only multiplies
  std::vector<uint32_t> inv_idx(elems.size());
  for (size_t x = 0; x < elems.size(); x++) inv_idx[x] = t.elems->index_of(elems[x].inverse());

  std::vector<std::vector<std::vector<uint64_t>>> a(
      r, std::vector<std::vector<uint64_t>>(r, std::vector<uint64_t>(r, 0)));
  parallel_for(r, jobs, [&](size_t k) {
    const Perm& zk = t.rep(k);
    for (size_t x = 0; x < elems.size(); x++) {
      size_t i = t.class_of[x];
      uint32_t y = t.elems->index_of(elems[inv_idx[x]] * zk);
      a[i][t.class_of[y]][k]++;
    }
  });
  return a;
}

uint64_t group_exponent(const ClassTable& t) { return t.exponent; }

}  // namespace mig
