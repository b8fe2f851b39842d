#include "mig/mi.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mig/errors.hpp"
#include "mig/util.hpp"

namespace mig {

namespace {

Int int_p_part(const Int& n, uint64_t p) {
  Int reduced, prime(static_cast<unsigned long>(p));
  mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
  return n / reduced;
}

std::vector<bool> fused_classes(const FusionMap& f) {
  std::vector<bool> hit(f.parent->num_classes(), false);
  for (uint32_t pc : f.to_parent) hit[pc] = true;
  return hit;
}

}  // namespace

std::string tier_name(SubgroupTier t) {
  return t == SubgroupTier::kEnumerated ? "enumerated" : "supplied";
}

std::string verdict_name(CharVerdict v) {
  switch (v) {
    case CharVerdict::kLinear: return "linear";
    case CharVerdict::kExcluded: return "excluded";
    case CharVerdict::kMi: return "mi";
    case CharVerdict::kNotMi: return "not_mi";
  }
  return "?";
}

std::vector<SubgroupData> prepare_subgroups(std::shared_ptr<const ClassTable> g,
                                            const std::vector<NamedSubgroup>& subs, int jobs) {
  std::vector<SubgroupData> out;
  out.reserve(subs.size());
  for (const NamedSubgroup& s : subs) {
    SubgroupData d;
    d.name = s.name;
    d.group = s.group;
    if (d.group->order() >= g->order())
      throw NotSubgroup("witness subgroup must be proper: " + d.name);
    d.classes = conjugacy_classes(d.group);
    d.chars = std::make_shared<CharacterTable>(character_table(d.classes, jobs));
    d.fusion = class_fusion(d.classes, g);
    d.fused = fused_classes(d.fusion);
    d.index = g->order() / d.group->order();
    out.push_back(std::move(d));
  }
  return out;
}

MiSearch find_mi_witness(const CharacterTable& gt, size_t chi,
                         const std::vector<SubgroupData>& subgroups) {
  MiSearch res;
  const ClassFunction& x = gt.irreducibles.at(chi);
  Int chi_deg = x.degree();
  for (uint32_t si = 0; si < subgroups.size() && !res.witness; si++) {
    const SubgroupData& s = subgroups[si];
    if (s.fusion.parent != gt.classes)
      throw InternalError("subgroup was prepared against a different class table");
    bool gap = false;
    for (size_t k = 0; k < x.values.size() && !gap; k++)
      gap = !s.fused[k] && !x.values[k].is_zero();
    Int index(static_cast<unsigned long>(s.index));
    for (uint32_t li = 0; li < s.chars->size() && !res.witness; li++) {
      CandidateTrace t{si, li, CandidateFate::kArithmetic};
      Int lam_deg = s.chars->degree(li);
      Int num = index * lam_deg;
      if (num % chi_deg != 0) {
        res.trace.push_back(t);
        continue;
      }
      Int m = num / chi_deg;
      if (m < 1 || m * m > index || chi_deg < m * lam_deg) {
        res.trace.push_back(t);
        continue;
      }
      if (gap) {
        t.fate = CandidateFate::kFusionGap;
        res.trace.push_back(t);
        continue;
      }
      ClassFunction ind = induce(s.fusion, s.chars->irreducibles[li]);
      Rat mr(m);
      bool eq = true;
      for (size_t k = 0; k < x.values.size() && eq; k++)
        eq = ind.values[k] == x.values[k] * mr;
      if (!eq) {
        t.fate = CandidateFate::kInductionMismatch;
        res.trace.push_back(t);
        continue;
      }
      t.fate = CandidateFate::kWitness;
      res.trace.push_back(t);
      res.witness = MiWitness{si, s.name, s.group->order(), li, lam_deg, m};
    }
  }
  return res;
}

namespace {

MiReport build_report(const std::string& name, const CharacterTable& gt,
                      const std::vector<SubgroupData>& maximals, SubgroupTier tier, int jobs,
                      uint64_t subgroup_cap, const std::function<bool(size_t)>& in_scope) {
  MiReport r;
  r.group = name;
  r.tier = tier;
  for (const SubgroupData& s : maximals) r.subgroup_names.push_back(s.name);
  r.solvable = is_solvable(*gt.classes->group);
  for (size_t i = 0; i < gt.size(); i++) {
    CharReport cr;
    cr.chi = static_cast<uint32_t>(i);
    cr.degree = gt.degree(i);
    if (cr.degree == 1) {
      cr.verdict = CharVerdict::kLinear;
    } else if (!in_scope(i)) {
      cr.verdict = CharVerdict::kExcluded;
    } else {
      if (maximals.empty()) throw NoSubgroupData("no subgroup list for " + name);
      MiSearch s = find_mi_witness(gt, i, maximals);
      cr.verdict = s.witness ? CharVerdict::kMi : CharVerdict::kNotMi;
      cr.witness = std::move(s.witness);
      cr.trace = std::move(s.trace);
      if (cr.verdict == CharVerdict::kNotMi) {
        r.mi_group = false;
        std::set<uint32_t> obs;
        for (const SubgroupData& sd : maximals)
          for (uint32_t c : fusion_gap_check(gt.irreducibles[i], sd.fusion)) obs.insert(c);
        cr.obstructions.assign(obs.begin(), obs.end());
      }
    }
    r.characters.push_back(std::move(cr));
  }
  uint64_t cap = std::min(subgroup_cap, kSubgroupEnumCap);
  if (gt.classes->order() <= cap) r.m_group = is_m_group(gt.classes, jobs, cap);
  return r;
}

}  // namespace

MiReport mi_group_report(const std::string& name, const CharacterTable& gt,
                         const std::vector<SubgroupData>& maximals, SubgroupTier tier, int jobs,
                         uint64_t subgroup_cap) {
  return build_report(name, gt, maximals, tier, jobs, subgroup_cap,
                      [](size_t) { return true; });
}

MiReport mi_relative_report(const std::string& name, const CharacterTable& gt,
                            const NormalSubgroup& n, const std::vector<SubgroupData>& maximals,
                            SubgroupTier tier, int jobs, uint64_t subgroup_cap) {
  if (!n.group.is_normal_in(*gt.classes->group))
    throw NotNormal("relative test needs a normal subgroup");
  uint64_t covered = 0;
  for (uint32_t c : n.classes) covered += gt.classes->sizes.at(c);
  if (covered != n.order) throw InternalError("normal subgroup class list is inconsistent");
  return build_report(name, gt, maximals, tier, jobs, subgroup_cap, [&](size_t i) {
    return !kernel_contains(gt.irreducibles[i], n);
  });
}

bool kernel_contains(const ClassFunction& chi, const NormalSubgroup& n) {
  const CycValue& deg = chi.values.at(0);
  for (uint32_t c : n.classes)
    if (chi.values.at(c) != deg) return false;
  return true;
}

bool is_m_group(std::shared_ptr<const ClassTable> t, int jobs, uint64_t cap) {
  std::vector<PermGroup> subs = enumerate_subgroups(t->group, cap);
  CharacterTable gt = character_table(t, jobs);
  uint64_t order = t->order();
  struct Prepared {
    std::shared_ptr<const CharacterTable> chars;
    FusionMap fusion;
  };
  std::vector<std::optional<Prepared>> cache(subs.size());
  for (size_t i = 0; i < gt.size(); i++) {
    Int d = gt.degree(i);
    if (d == 1) continue;  // linear characters are induced from G itself
    uint64_t dd = d.get_ui();
    bool found = false;
    for (size_t u = 0; u < subs.size() && !found; u++) {
      if (subs[u].order() == order || order / subs[u].order() != dd) continue;
      if (!cache[u]) {
        auto ct = conjugacy_classes(std::make_shared<PermGroup>(subs[u]));
        Prepared p{std::make_shared<CharacterTable>(character_table(ct, jobs)),
                   class_fusion(ct, t)};
        cache[u] = std::move(p);
      }
      const Prepared& p = *cache[u];
      for (size_t li = 0; li < p.chars->size() && !found; li++) {
        if (p.chars->degree(li) != 1) continue;
        found = induce(p.fusion, p.chars->irreducibles[li]) == gt.irreducibles[i];
      }
    }
    if (!found) return false;
  }
  return true;
}

SteinbergReport steinberg_checks(const FusionMap& f, const ClassFunction& lambda, const Int& m,
                                 uint64_t p) {
  SteinbergReport r;
  const ClassTable& s = *f.parent;
  std::vector<bool> hit = fused_classes(f);
  for (size_t c = 0; c < s.num_classes(); c++)
    if (s.rep_orders[c] % p != 0 && !hit[c]) r.missed_classes.push_back(static_cast<uint32_t>(c));
  r.semisimple_fusion = r.missed_classes.empty();
  Int hp(static_cast<unsigned long>(p_part(f.sub->order(), p)));
  r.multiplier_p_parts = m % static_cast<unsigned long>(p) != 0 && int_p_part(lambda.degree(), p) == hp;
  uint64_t index = s.order() / f.sub->order();
  Int ip(static_cast<unsigned long>(p_part(index, p)));
  Int ipp(static_cast<unsigned long>(p_prime_part(index, p)));
  r.index_bounds = ip >= m && m >= ipp;
  return r;
}

std::vector<uint32_t> fusion_gap_check(const ClassFunction& chi, const FusionMap& f) {
  if (chi.table != f.parent) throw InternalError("fusion gap needs chi on the parent table");
  std::vector<bool> hit = fused_classes(f);
  std::vector<uint32_t> out;
  for (size_t c = 0; c < chi.values.size(); c++)
    if (!hit[c] && !chi.values[c].is_zero()) out.push_back(static_cast<uint32_t>(c));
  return out;
}

}  // namespace mig
