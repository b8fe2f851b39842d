// Builds data/corpus.json: every group the reports reference, with cycle-form
// generators, declared orders, and (for groups beyond the lattice cap) the
// maximal-subgroup records the witness search runs over.  Each record is
// verified while it is built: orders through stabilizer chains, containment,
// maximality certificates, and non-conjugacy of equal-order subgroup classes.
// The construction is fully deterministic, so reruns reproduce the file byte
// for byte.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mig/class_table.hpp"
#include "mig/corpus.hpp"
#include "mig/errors.hpp"
#include "mig/perm.hpp"
#include "mig/perm_group.hpp"
#include "mig/subgroup_lattice.hpp"

using namespace mig;

namespace {

void require(bool ok, const std::string& what) {
  if (ok) return;
  std::cerr << "corpusgen: " << what << "\n";
  std::exit(1);
}

std::shared_ptr<const PermGroup> make(int degree, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  gens.reserve(cycles.size());
  for (const std::string& c : cycles) gens.push_back(Perm::parse(degree, c));
  return std::make_shared<PermGroup>(degree, gens);
}

bool transitive(const PermGroup& g) {
  std::vector<char> seen(g.degree(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  size_t hit = 1;
  while (!queue.empty()) {
    int p = queue.back();
    queue.pop_back();
    for (const Perm& x : g.generators()) {
      int q = x.apply(p);
      if (!seen[q]) {
        seen[q] = 1;
        hit++;
        queue.push_back(q);
      }
    }
  }
  return hit == static_cast<size_t>(g.degree());
}

// whether some ambient element conjugates h1 onto h2 (h1 given by short
// generator lists; h2 checked by membership)
bool conjugate_in(const std::shared_ptr<const PermGroup>& amb, const PermGroup& h1,
                  const PermGroup& h2) {
  if (h1.order() != h2.order()) return false;
  auto en = amb->enumerate();
  for (const Perm& g : en->elements) {
    bool ok = true;
    for (const Perm& x : h1.generators())
      if (!h2.contains(x.conjugated_by(g))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

CorpusSubgroup record_subgroup(const std::string& name, const PermGroup& h, bool maximal) {
  CorpusSubgroup s;
  s.name = name;
  s.claimed_maximal = maximal;
  s.generators = small_generating_set(h);
  return s;
}

CorpusGroup record_group(const std::string& name, const std::shared_ptr<const PermGroup>& g,
                         const std::string& notes) {
  CorpusGroup r;
  r.name = name;
  r.degree = g->degree();
  r.generators = g->generators();
  r.expected_order = g->order();
  r.notes = notes;
  return r;
}

void certify_maximal(const std::string& gname, const std::shared_ptr<const PermGroup>& g,
                     const std::string& hname, const PermGroup& h) {
  require(is_maximal_subgroup(g, h), hname + " failed its maximality certificate in " + gname);
  std::cout << "  " << hname << "  order " << h.order() << "  (maximal)\n";
}

// sort subgroup records the way the search will visit them
void sort_records(std::vector<CorpusSubgroup>& subs,
                  const std::map<std::string, uint64_t>& orders) {
  std::sort(subs.begin(), subs.end(), [&](const CorpusSubgroup& a, const CorpusSubgroup& b) {
    uint64_t oa = orders.at(a.name), ob = orders.at(b.name);
    if (oa != ob) return oa > ob;
    return a.name < b.name;
  });
}

// ---------------------------------------------------------------------------
// alternating group of degree 7 and its subgroup records
// ---------------------------------------------------------------------------

CorpusGroup build_a7() {
  auto a7 = make(7, {"(1,2,3,4,5,6,7)", "(5,6,7)"});
  require(a7->order() == 2520, "A7 order");
  std::cout << "A7 on 7 points, order 2520\n";

  PermGroup a6 = *make(7, {"(2,3,4,5,6)", "(1,2,3)"});
  require(a6.order() == 360, "A6 < A7 order");

  PermGroup s5 = *make(7, {"(1,2,3,4,5)", "(1,2)(6,7)"});
  require(s5.order() == 120, "S5 < A7 order");

  PermGroup part43 = *make(7, {"(1,2,3)", "(5,6,7)", "(1,2)(5,6)", "(1,2,3,4)(5,6)"});
  require(part43.order() == 72, "(A4x3):2 < A7 order");

  // the simple order-168 subgroups: scan for a mate of the 7-cycle, then
  // conjugate by a transposition to reach the second class
  Perm c7 = Perm::parse(7, "(1,2,3,4,5,6,7)");
  auto en = a7->enumerate();
  std::vector<Perm> lgens;
  for (const Perm& x : en->elements) {
    uint64_t o = x.order();
    if (o != 2 && o != 3 && o != 4) continue;
    PermGroup h(7, {c7, x});
    if (h.order() == 168) {
      lgens = {c7, x};
      break;
    }
  }
  require(!lgens.empty(), "no order-168 mate for the 7-cycle in A7");
  PermGroup l7a(7, lgens);
  Perm flip = Perm::parse(7, "(1,2)");
  PermGroup l7b(7, {lgens[0].conjugated_by(flip), lgens[1].conjugated_by(flip)});
  require(l7b.order() == 168, "conjugated order-168 subgroup");
  require(!conjugate_in(a7, l7a, l7b), "the two order-168 classes in A7 must be distinct");

  PermGroup a5 = *make(7, {"(1,2,3,4,5)", "(1,2,3)"});
  require(a5.order() == 60, "A5 < A7 order");
  require(!is_maximal_subgroup(a7, a5), "A5 < A7 is not maximal (it sits inside A6)");

  certify_maximal("A7", a7, "A6", a6);
  certify_maximal("A7", a7, "L2(7)a", l7a);
  certify_maximal("A7", a7, "L2(7)b", l7b);
  certify_maximal("A7", a7, "S5", s5);
  certify_maximal("A7", a7, "(A4x3):2", part43);
  std::cout << "  A5  order 60  (recorded, not maximal)\n";

  CorpusGroup r = record_group(
      "A7", a7, "alternating group of degree 7; subgroup records cover its five maximal classes "
                "plus a non-maximal two-point stabilizer A5");
  r.subgroups.push_back(record_subgroup("A6", a6, true));
  r.subgroups.push_back(record_subgroup("L2(7)a", l7a, true));
  r.subgroups.push_back(record_subgroup("L2(7)b", l7b, true));
  r.subgroups.push_back(record_subgroup("S5", s5, true));
  r.subgroups.push_back(record_subgroup("(A4x3):2", part43, true));
  r.subgroups.push_back(record_subgroup("A5", a5, false));
  sort_records(r.subgroups, {{"A6", 360},
                             {"L2(7)a", 168},
                             {"L2(7)b", 168},
                             {"S5", 120},
                             {"(A4x3):2", 72},
                             {"A5", 60}});
  return r;
}

// ---------------------------------------------------------------------------
// Mathieu group on 11 points
// ---------------------------------------------------------------------------

CorpusGroup build_m11() {
  auto m11 = make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
  require(m11->order() == 7920, "M11 order");
  std::cout << "M11 on 11 points, order 7920\n";

  PermGroup m10 = m11->point_stabilizer({11});
  require(m10.order() == 720, "M10 = one-point stabilizer order");

  PermGroup m92 = set_stabilizer(m11, {10, 11});
  require(m92.order() == 144, "M9.2 = two-point set stabilizer order");

  // the order-660 subgroup: scan for a mate of the 11-cycle
  Perm c11 = m11->generators()[0];
  auto en = m11->enumerate();
  std::vector<Perm> lgens;
  for (const Perm& x : en->elements) {
    uint64_t o = x.order();
    if (o != 2 && o != 3 && o != 5 && o != 6) continue;
    PermGroup h(11, {c11, x});
    if (h.order() == 660) {
      lgens = {c11, x};
      break;
    }
  }
  require(!lgens.empty(), "no order-660 mate for the 11-cycle in M11");
  PermGroup l11(11, lgens);

  // the order-120 subgroup stabilizes a special 5-set; scan the 5-subsets
  PermGroup s5(11, {Perm::identity(11)});
  bool found_s5 = false;
  for (int a = 1; a <= 7 && !found_s5; a++)
    for (int b = a + 1; b <= 8 && !found_s5; b++)
      for (int c = b + 1; c <= 9 && !found_s5; c++)
        for (int d = c + 1; d <= 10 && !found_s5; d++)
          for (int e = d + 1; e <= 11 && !found_s5; e++) {
            PermGroup st = set_stabilizer(m11, {a, b, c, d, e});
            if (st.order() == 120) {
              s5 = st;
              found_s5 = true;
            }
          }
  require(found_s5, "no 5-set with an order-120 stabilizer in M11");

  // the order-48 subgroup is an involution centralizer
  auto cls = conjugacy_classes(m11);
  PermGroup gl23(11, {Perm::identity(11)});
  bool found_gl = false;
  for (uint32_t c = 0; c < cls->num_classes(); c++)
    if (cls->rep_orders[c] == 2) {
      gl23 = centralizer(m11, cls->rep(c));
      found_gl = true;
      break;
    }
  require(found_gl && gl23.order() == 48, "involution centralizer of order 48 in M11");

  certify_maximal("M11", m11, "M10", m10);
  certify_maximal("M11", m11, "L2(11)", l11);
  certify_maximal("M11", m11, "M9.2", m92);
  certify_maximal("M11", m11, "S5", s5);
  certify_maximal("M11", m11, "GL(2,3)", gl23);

  CorpusGroup r = record_group("M11", m11,
                               "Mathieu group on 11 points; subgroup records cover its five "
                               "maximal classes");
  r.subgroups.push_back(record_subgroup("M10", m10, true));
  r.subgroups.push_back(record_subgroup("L2(11)", l11, true));
  r.subgroups.push_back(record_subgroup("M9.2", m92, true));
  r.subgroups.push_back(record_subgroup("S5", s5, true));
  r.subgroups.push_back(record_subgroup("GL(2,3)", gl23, true));
  sort_records(r.subgroups,
               {{"M10", 720}, {"L2(11)", 660}, {"M9.2", 144}, {"S5", 120}, {"GL(2,3)", 48}});
  return r;
}

// ---------------------------------------------------------------------------
// Mathieu group on 12 points
// ---------------------------------------------------------------------------

// extend the 11-point generators by a fixed-point-free involution sending
// 12 to 1; the matchings of {2..11} are scanned in lexicographic order
Perm find_extending_involution(const std::vector<Perm>& m11gens) {
  std::vector<int> rest{2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  Perm result;
  bool found = false;

  std::vector<std::vector<int>> pairs;
  std::function<void(std::vector<int>&)> scan = [&](std::vector<int>& left) {
    if (found) return;
    if (left.empty()) {
      std::vector<std::vector<int>> cycles{{1, 12}};
      for (const auto& p : pairs) cycles.push_back(p);
      Perm t = Perm::from_cycles(12, cycles);
      std::vector<Perm> gens = m11gens;
      gens.push_back(t);
      if (PermGroup(12, gens).order() == 95040) {
        result = t;
        found = true;
      }
      return;
    }
    int a = left[0];
    for (size_t i = 1; i < left.size() && !found; i++) {
      int b = left[i];
      std::vector<int> next;
      for (size_t j = 1; j < left.size(); j++)
        if (j != i) next.push_back(left[j]);
      pairs.push_back({a, b});
      scan(next);
      pairs.pop_back();
    }
  };
  scan(rest);
  require(found, "no involution extends the 11-point generators to order 95040");
  return result;
}

CorpusGroup build_m12() {
  std::vector<Perm> m11gens{Perm::parse(12, "(1,2,3,4,5,6,7,8,9,10,11)"),
                            Perm::parse(12, "(3,7,11,8)(4,10,5,6)")};
  Perm ext = find_extending_involution(m11gens);
  auto m12 = std::make_shared<PermGroup>(12, std::vector<Perm>{m11gens[0], m11gens[1], ext});
  require(m12->order() == 95040, "M12 order");
  std::cout << "M12 on 12 points, order 95040 (extending involution " << ext.to_string() << ")\n";

  PermGroup m11a = m12->point_stabilizer({12});
  require(m11a.order() == 7920, "M11a = point stabilizer order");

  // scan for mates of the 11-cycle: the transitive order-7920 subgroup and
  // the transitive order-660 one
  Perm c11 = m11gens[0];
  auto en = m12->enumerate();
  PermGroup m11b(12, {Perm::identity(12)});
  PermGroup l11(12, {Perm::identity(12)});
  bool found_b = false, found_l = false;
  for (const Perm& x : en->elements) {
    if (found_b && found_l) break;
    uint64_t o = x.order();
    if (o == 1 || o == 10 || o == 12) continue;
    PermGroup h(12, {c11, x});
    if (!found_b && h.order() == 7920 && transitive(h)) {
      m11b = h;
      found_b = true;
    } else if (!found_l && h.order() == 660 && transitive(h)) {
      l11 = h;
      found_l = true;
    }
  }
  require(found_b, "no transitive order-7920 mate of the 11-cycle in M12");
  require(found_l, "no transitive order-660 mate of the 11-cycle in M12");
  require(!conjugate_in(m12, m11a, m11b), "the two order-7920 classes in M12 must be distinct");

  // hexad stabilizer pair: the special 6-sets have order-720 stabilizers;
  // the group preserving a hexad-plus-complement pair has order 1440
  std::vector<int> hexad;
  for (int x = 6; x <= 12 && hexad.empty(); x++) {
    std::vector<int> probe{1, 2, 3, 4, 5, x};
    if (set_stabilizer(m12, probe).order() == 720) hexad = probe;
  }
  require(!hexad.empty(), "no hexad through 1..5 in M12");
  std::vector<char> in_hex(13, 0);
  for (int p : hexad) in_hex[p] = 1;
  std::vector<Perm> pairkeep;
  for (const Perm& g : en->elements) {
    int side = in_hex[g.apply(hexad[0] - 1) + 1];
    bool ok = true;
    for (int p : hexad)
      if (in_hex[g.apply(p - 1) + 1] != side) {
        ok = false;
        break;
      }
    if (ok) pairkeep.push_back(g);
  }
  PermGroup hexpair(12, pairkeep);
  require(hexpair.order() == 1440, "hexad-pair stabilizer order in M12");
  PermGroup a622(12, small_generating_set(hexpair));

  // the two involution centralizers
  auto cls = conjugacy_classes(m12);
  PermGroup cent240(12, {Perm::identity(12)});
  PermGroup cent192(12, {Perm::identity(12)});
  for (uint32_t c = 0; c < cls->num_classes(); c++) {
    if (cls->rep_orders[c] != 2) continue;
    PermGroup cz = centralizer(m12, cls->rep(c));
    if (cz.order() == 240) cent240 = PermGroup(12, small_generating_set(cz));
    if (cz.order() == 192) cent192 = PermGroup(12, small_generating_set(cz));
  }
  require(cent240.order() == 240, "order-240 involution centralizer in M12");
  require(cent192.order() == 192, "order-192 involution centralizer in M12");

  // normalizer of a homocyclic 4x4 subgroup: the second order-192 class
  PermGroup n44(12, {Perm::identity(12)});
  bool found_44 = false;
  for (uint32_t c = 0; c < cls->num_classes() && !found_44; c++) {
    if (cls->rep_orders[c] != 4) continue;
    Perm x = cls->rep(c);
    PermGroup cz = centralizer(m12, x);
    auto cen = cz.enumerate();
    for (const Perm& y : cen->elements) {
      if (y.order() != 4) continue;
      PermGroup v(12, {x, y});
      if (v.order() != 16) continue;
      auto ven = v.enumerate();
      int quads = 0;
      for (const Perm& z : ven->elements) quads += z.order() == 4;
      if (quads != 12) continue;  // homocyclic type (4,4) has twelve order-4 elements
      PermGroup n = normalizer(m12, v);
      if (n.order() == 192) {
        n44 = PermGroup(12, small_generating_set(n));
        found_44 = true;
        break;
      }
    }
  }
  require(found_44, "no homocyclic 4x4 with an order-192 normalizer in M12");
  require(!conjugate_in(m12, cent192, n44), "the two order-192 classes in M12 must be distinct");

  // normalizers of rank-two elementary abelian 3-subgroups: two classes of
  // order 432
  std::vector<PermGroup> n432;
  std::set<std::vector<uint32_t>> seen_nines;
  for (uint32_t c = 0; c < cls->num_classes(); c++) {
    if (cls->rep_orders[c] != 3) continue;
    Perm x = cls->rep(c);
    PermGroup cz = centralizer(m12, x);
    auto cen = cz.enumerate();
    for (const Perm& y : cen->elements) {
      if (y.order() != 3) continue;
      PermGroup v(12, {x, y});
      if (v.order() != 9) continue;
      auto ven = v.enumerate();
      std::vector<uint32_t> fp;
      for (const Perm& z : ven->elements) fp.push_back(en->index_of(z));
      std::sort(fp.begin(), fp.end());
      if (!seen_nines.insert(fp).second) continue;
      PermGroup n = normalizer(m12, v);
      if (n.order() != 432) continue;
      PermGroup small(12, small_generating_set(n));
      bool fresh = true;
      for (const PermGroup& prev : n432)
        if (conjugate_in(m12, prev, small)) {
          fresh = false;
          break;
        }
      if (fresh) n432.push_back(small);
      if (n432.size() == 2) break;
    }
    if (n432.size() == 2) break;
  }
  require(n432.size() == 2, "expected two order-432 normalizer classes in M12");

  // normalizer of a cyclic 3-subgroup with the smaller centralizer
  PermGroup a4s3(12, {Perm::identity(12)});
  bool found_72 = false;
  for (uint32_t c = 0; c < cls->num_classes() && !found_72; c++) {
    if (cls->rep_orders[c] != 3 || cls->centralizer_orders[c] != 36) continue;
    PermGroup n = normalizer(m12, PermGroup(12, {cls->rep(c)}));
    require(n.order() == 72, "normalizer of the small-centralizer 3-element in M12");
    a4s3 = PermGroup(12, small_generating_set(n));
    found_72 = true;
  }
  require(found_72, "no order-3 class with centralizer order 36 in M12");

  PermGroup m11a_small(12, small_generating_set(m11a));
  certify_maximal("M12", m12, "M11a", m11a_small);
  certify_maximal("M12", m12, "M11b", m11b);
  certify_maximal("M12", m12, "A6.2^2", a622);
  certify_maximal("M12", m12, "L2(11)", l11);
  certify_maximal("M12", m12, "3^2:2S4a", n432[0]);
  certify_maximal("M12", m12, "3^2:2S4b", n432[1]);
  certify_maximal("M12", m12, "2xS5", cent240);
  certify_maximal("M12", m12, "2^(1+4):S3", cent192);
  certify_maximal("M12", m12, "4^2:D12", n44);
  certify_maximal("M12", m12, "A4xS3", a4s3);

  CorpusGroup r = record_group("M12", m12,
                               "Mathieu group on 12 points; subgroup records cover its ten "
                               "maximal classes");
  r.subgroups.push_back(record_subgroup("M11a", m11a_small, true));
  r.subgroups.push_back(record_subgroup("M11b", m11b, true));
  r.subgroups.push_back(record_subgroup("A6.2^2", a622, true));
  r.subgroups.push_back(record_subgroup("L2(11)", l11, true));
  r.subgroups.push_back(record_subgroup("3^2:2S4a", n432[0], true));
  r.subgroups.push_back(record_subgroup("3^2:2S4b", n432[1], true));
  r.subgroups.push_back(record_subgroup("2xS5", cent240, true));
  r.subgroups.push_back(record_subgroup("2^(1+4):S3", cent192, true));
  r.subgroups.push_back(record_subgroup("4^2:D12", n44, true));
  r.subgroups.push_back(record_subgroup("A4xS3", a4s3, true));
  sort_records(r.subgroups, {{"M11a", 7920},
                             {"M11b", 7920},
                             {"A6.2^2", 1440},
                             {"L2(11)", 660},
                             {"3^2:2S4a", 432},
                             {"3^2:2S4b", 432},
                             {"2xS5", 240},
                             {"2^(1+4):S3", 192},
                             {"4^2:D12", 192},
                             {"A4xS3", 72}});
  return r;
}

// ---------------------------------------------------------------------------
// unitary group on the 45 isotropic points of the hermitian surface over F4
// ---------------------------------------------------------------------------

// F4 = {0, 1, w, w^2} encoded 0..3 with addition = xor and w^2 = w + 1
int f4_mul(int a, int b) {
  static const int m[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return m[a][b];
}
int f4_conj(int a) { return a >= 2 ? 5 - a : a; }  // Frobenius x -> x^2
int f4_inv(int a) { return a >= 2 ? 5 - a : a; }   // x^3 = 1 for x != 0

using Vec4 = std::array<int, 4>;

// antidiagonal hermitian form: every F2-rational vector is isotropic, which
// makes the symplectic subgroup easy to write down
int herm(const Vec4& x, const Vec4& y) {
  int s = 0;
  for (int i = 0; i < 4; i++) s ^= f4_mul(x[i], f4_conj(y[3 - i]));
  return s;
}

Vec4 canon_point(Vec4 v) {
  for (int i = 0; i < 4; i++)
    if (v[i]) {
      int c = f4_inv(v[i]);
      for (int k = 0; k < 4; k++) v[k] = f4_mul(v[k], c);
      return v;
    }
  require(false, "zero vector has no projective point");
  return v;
}

struct HermitianSpace {
  std::vector<Vec4> points;       // the 45 isotropic points, sorted
  std::map<Vec4, int> index;      // 0-based
  int at(const Vec4& v) const { return index.at(canon_point(v)); }
};

HermitianSpace hermitian_points() {
  HermitianSpace h;
  std::set<Vec4> seen;
  for (int a = 0; a < 4; a++)
    for (int b = 0; b < 4; b++)
      for (int c = 0; c < 4; c++)
        for (int d = 0; d < 4; d++) {
          Vec4 v{a, b, c, d};
          if (v == Vec4{0, 0, 0, 0} || herm(v, v)) continue;
          seen.insert(canon_point(v));
        }
  h.points.assign(seen.begin(), seen.end());
  require(h.points.size() == 45, "hermitian surface point count");
  for (size_t i = 0; i < h.points.size(); i++) h.index[h.points[i]] = static_cast<int>(i);
  return h;
}

// unitary transvection x -> x + h(x,a) a for an isotropic a, as a point
// permutation
Perm transvection(const HermitianSpace& hs, const Vec4& a) {
  std::vector<uint8_t> img(hs.points.size());
  for (size_t i = 0; i < hs.points.size(); i++) {
    int c = herm(hs.points[i], a);
    Vec4 w = hs.points[i];
    for (int k = 0; k < 4; k++) w[k] ^= f4_mul(c, a[k]);
    img[i] = static_cast<uint8_t>(hs.at(w));
  }
  return Perm(img);
}

CorpusGroup build_u42() {
  HermitianSpace hs = hermitian_points();

  // greedy transvection generators until the full group appears
  StabChain chain(45);
  std::vector<Perm> gens;
  for (const Vec4& a : hs.points) {
    Perm t = transvection(hs, a);
    if (chain.contains(t)) continue;
    chain.add_generator(t);
    gens.push_back(t);
    if (chain.order() == 25920) break;
  }
  auto u42 = std::make_shared<PermGroup>(45, gens);
  require(u42->order() == 25920, "U4(2) order from transvections");
  std::cout << "U4(2) on 45 points, order 25920 (" << gens.size() << " transvections)\n";

  // point stabilizer
  PermGroup stab576 = u42->point_stabilizer({1});
  require(stab576.order() == 576, "U4(2) point stabilizer order");
  PermGroup p576(45, small_generating_set(stab576));

  // stabilizer of a totally isotropic line: the five points on <e1, e2>
  std::vector<int> line;
  for (const Vec4& v : {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{1, 1, 0, 0}, Vec4{1, 2, 0, 0},
                        Vec4{1, 3, 0, 0}})
    line.push_back(hs.at(v) + 1);
  PermGroup stab960 = set_stabilizer(u42, line);
  require(stab960.order() == 960, "isotropic-line stabilizer order");
  PermGroup p960(45, small_generating_set(stab960));

  // the rational symplectic subgroup: transvections at the 15 F2-vectors
  StabChain spchain(45);
  std::vector<Perm> spgens;
  for (int mask = 1; mask < 16; mask++) {
    Vec4 a{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1};
    Perm t = transvection(hs, a);
    if (spchain.contains(t)) continue;
    spchain.add_generator(t);
    spgens.push_back(t);
  }
  PermGroup s6(45, spgens);
  require(s6.order() == 720, "rational symplectic subgroup order");
  PermGroup p720(45, small_generating_set(s6));

  // stabilizer of a nondegenerate point = stabilizer of its 9-point
  // perpendicular section
  Vec4 anis{1, 0, 0, 2};
  require(herm(anis, anis) != 0, "chosen point must be nondegenerate");
  std::vector<int> section;
  for (size_t i = 0; i < hs.points.size(); i++)
    if (herm(hs.points[i], anis) == 0) section.push_back(static_cast<int>(i) + 1);
  require(section.size() == 9, "perpendicular section size");
  PermGroup stab648a = set_stabilizer(u42, section);
  require(stab648a.order() == 648, "nondegenerate-point stabilizer order");
  PermGroup p648a(45, small_generating_set(stab648a));

  // stabilizer of an orthogonal tetrad of nondegenerate points, computed as
  // the elements permuting the four perpendicular sections
  std::vector<Vec4> tetrad;
  for (int a = 0; a < 4 && tetrad.size() < 4; a++)
    for (int b = 0; b < 4 && tetrad.size() < 4; b++)
      for (int c = 0; c < 4 && tetrad.size() < 4; c++)
        for (int d = 0; d < 4 && tetrad.size() < 4; d++) {
          Vec4 v{a, b, c, d};
          if (v == Vec4{0, 0, 0, 0} || herm(v, v) == 0) continue;
          bool perp = true;
          for (const Vec4& u : tetrad)
            if (herm(v, u) != 0) {
              perp = false;
              break;
            }
          if (perp) tetrad.push_back(canon_point(v));
        }
  require(tetrad.size() == 4, "orthogonal tetrad of nondegenerate points");
  std::vector<std::vector<int>> sections(4);
  for (int k = 0; k < 4; k++)
    for (size_t i = 0; i < hs.points.size(); i++)
      if (herm(hs.points[i], tetrad[k]) == 0) sections[k].push_back(static_cast<int>(i));
  auto en = u42->enumerate();
  std::set<std::vector<int>> section_set(sections.begin(), sections.end());
  std::vector<Perm> tkeep;
  for (const Perm& g : en->elements) {
    bool ok = true;
    for (const auto& s : sections) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int p : s) img.push_back(g.apply(p));
      std::sort(img.begin(), img.end());
      if (!section_set.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) tkeep.push_back(g);
  }
  PermGroup stab648b(45, tkeep);
  require(stab648b.order() == 648, "tetrad stabilizer order");
  PermGroup p648b(45, small_generating_set(stab648b));
  require(!conjugate_in(u42, p648a, p648b), "the two order-648 classes must be distinct");

  certify_maximal("U4(2)", u42, "2^4:A5", p960);
  certify_maximal("U4(2)", u42, "S6", p720);
  certify_maximal("U4(2)", u42, "3^(1+2):2A4", p648a);
  certify_maximal("U4(2)", u42, "3^3:S4", p648b);
  certify_maximal("U4(2)", u42, "2.(A4xA4).2", p576);

  CorpusGroup r = record_group(
      "U4(2)", u42, "unitary group on the 45 isotropic points of the hermitian surface over F4; "
                    "subgroup records cover its five maximal classes");
  r.subgroups.push_back(record_subgroup("2^4:A5", p960, true));
  r.subgroups.push_back(record_subgroup("S6", p720, true));
  r.subgroups.push_back(record_subgroup("3^(1+2):2A4", p648a, true));
  r.subgroups.push_back(record_subgroup("3^3:S4", p648b, true));
  r.subgroups.push_back(record_subgroup("2.(A4xA4).2", p576, true));
  sort_records(r.subgroups, {{"2^4:A5", 960},
                             {"S6", 720},
                             {"3^(1+2):2A4", 648},
                             {"3^3:S4", 648},
                             {"2.(A4xA4).2", 576}});
  return r;
}

// ---------------------------------------------------------------------------

CorpusGroup simple_record(const std::string& name, int degree,
                          const std::vector<std::string>& cycles, uint64_t order,
                          const std::string& notes) {
  auto g = make(degree, cycles);
  require(g->order() == order, name + " order (expected " + std::to_string(order) + ", got " +
                                   std::to_string(g->order()) + ")");
  std::cout << name << " on " << degree << " points, order " << order << "\n";
  return record_group(name, g, notes);
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/corpus.json";

  std::vector<CorpusGroup> groups;
  groups.push_back(simple_record("S3", 3, {"(1,2,3)", "(1,2)"}, 6,
                                 "symmetric group on 3 letters"));
  groups.push_back(simple_record("A4", 4, {"(1,2,3)", "(1,2)(3,4)"}, 12,
                                 "alternating group of degree 4"));
  groups.push_back(simple_record("S4", 4, {"(1,2)", "(1,2,3,4)"}, 24,
                                 "symmetric group on 4 letters"));
  groups.push_back(simple_record("D10", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}, 10,
                                 "dihedral group of order 10"));
  groups.push_back(simple_record("Q8", 8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"}, 8,
                                 "quaternion group in its regular action"));
  groups.push_back(simple_record("SL(2,3)", 8, {"(1,3,2,6)(4,5,8,7)", "(3,4,5)(6,8,7)"}, 24,
                                 "special linear group SL(2,3) on the eight nonzero vectors "
                                 "of F3^2"));
  groups.push_back(simple_record("C2xC2", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}, 4,
                                 "Klein four-group in its regular action"));
  groups.push_back(simple_record("A5", 5, {"(1,2,3,4,5)", "(1,2,3)"}, 60,
                                 "alternating group of degree 5, also L2(5) and L2(4)"));
  groups.push_back(simple_record("S5", 5, {"(1,2)", "(1,2,3,4,5)"}, 120,
                                 "symmetric group on 5 letters"));
  groups.push_back(simple_record("A6", 6, {"(2,3,4,5,6)", "(1,2,3)"}, 360,
                                 "alternating group of degree 6"));
  groups.push_back(simple_record("L2(7)", 8, {"(2,3,4,5,6,7,8)", "(1,2)(3,8)(4,5)(6,7)"}, 168,
                                 "simple group of order 168 on the projective line over F7, "
                                 "also L3(2)"));
  groups.push_back(build_a7());
  groups.push_back(build_u42());
  groups.push_back(build_m11());
  groups.push_back(build_m12());

  std::string text = corpus_json_text(groups);
  std::ofstream out(out_path, std::ios::binary);
  require(static_cast<bool>(out), "cannot open " + out_path + " for writing");
  out << text;
  out.close();

  Corpus reread = load_corpus(out_path);
  require(reread.groups.size() == groups.size(), "round-trip group count");
  std::cout << "wrote " << out_path << " (" << text.size() << " bytes, checksum "
            << reread.checksum << ")\n";
  return 0;
}
