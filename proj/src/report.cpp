#include "mig/report.hpp"

#include <algorithm>
#include <sstream>

namespace mig {

const char kSuppliedListCaveat[] =
    "not-mi verdicts are complete relative to the supplied maximal-subgroup list.";

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

namespace {

uint64_t to_u64(const Int& x) { return x.get_ui(); }

nlohmann::json char_entry(const CharReport& cr, const GroupBundle& b) {
  nlohmann::json e;
  e["index"] = cr.chi;
  e["degree"] = to_u64(cr.degree);
  e["verdict"] = verdict_name(cr.verdict);
  if (cr.witness) {
    nlohmann::json w;
    w["subgroup"] = cr.witness->subgroup_name;
    w["subgroup_order"] = cr.witness->subgroup_order;
    w["lambda_degree"] = to_u64(cr.witness->lambda_degree);
    w["m"] = to_u64(cr.witness->m);
    e["witness"] = w;
  }
  if (cr.verdict == CharVerdict::kNotMi) {
    nlohmann::json obs = nlohmann::json::array();
    for (uint32_t c : cr.obstructions) obs.push_back(b.classes->label(c));
    e["obstructions"] = obs;
  }
  return e;
}

// two-space separated columns, each right-aligned to its widest cell
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  std::vector<size_t> width(cols, 0);
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); c++) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); c++) {
      if (c) out << "  ";
      out << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

nlohmann::json chartab_json(const GroupBundle& b, uint64_t checksum) {
  const ClassTable& t = *b.classes;
  nlohmann::json j;
  j["group"] = b.record->name;
  j["order"] = t.order();
  j["num_classes"] = t.num_classes();
  j["exponent"] = t.exponent;
  j["corpus_checksum"] = checksum;
  nlohmann::json classes = nlohmann::json::array();
  for (size_t c = 0; c < t.num_classes(); c++) {
    nlohmann::json e;
    e["label"] = t.label(c);
    e["size"] = t.sizes[c];
    e["rep_order"] = t.rep_orders[c];
    e["centralizer"] = t.centralizer_orders[c];
    classes.push_back(e);
  }
  j["classes"] = classes;
  nlohmann::json degrees = nlohmann::json::array();
  nlohmann::json irr = nlohmann::json::array();
  for (const ClassFunction& chi : b.chars->irreducibles) {
    degrees.push_back(to_u64(chi.degree()));
    nlohmann::json row = nlohmann::json::array();
    for (const CycValue& v : chi.values) row.push_back(v.to_string());
    irr.push_back(row);
  }
  j["degrees"] = degrees;
  j["irreducibles"] = irr;
  return j;
}

std::string chartab_text(const GroupBundle& b) {
  const ClassTable& t = *b.classes;
  std::ostringstream head;
  head << b.record->name << "  (order " << t.order() << ", " << t.num_classes()
       << " classes, exponent " << t.exponent << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> r0{""}, r1{"size"}, r2{"ord"};
  for (size_t c = 0; c < t.num_classes(); c++) {
    r0.push_back(t.label(c));
    r1.push_back(std::to_string(t.sizes[c]));
    r2.push_back(std::to_string(t.rep_orders[c]));
  }
  rows.push_back(r0);
  rows.push_back(r1);
  rows.push_back(r2);
  for (size_t i = 0; i < b.chars->size(); i++) {
    std::vector<std::string> r{"X." + std::to_string(i + 1)};
    for (const CycValue& v : b.chars->irreducibles[i].values) r.push_back(v.to_string());
    rows.push_back(r);
  }
  return head.str() + render_columns(rows);
}

nlohmann::json mi_report_json(const MiReport& r, const GroupBundle& b, uint64_t checksum) {
  nlohmann::json j;
  j["group"] = r.group;
  j["order"] = b.group->order();
  j["solvable"] = r.solvable;
  j["is_mi_group"] = r.mi_group;
  j["is_m_group"] = r.m_group ? nlohmann::json(*r.m_group) : nlohmann::json(nullptr);
  j["subgroup_tier"] = tier_name(r.tier);
  j["subgroups_searched"] = r.subgroup_names;
  j["corpus_checksum"] = checksum;
  nlohmann::json chars = nlohmann::json::array();
  for (const CharReport& cr : r.characters) chars.push_back(char_entry(cr, b));
  j["chars"] = chars;
  nlohmann::json caveats = nlohmann::json::array();
  if (r.tier == SubgroupTier::kSupplied) caveats.push_back(kSuppliedListCaveat);
  j["caveats"] = caveats;
  return j;
}

std::string mi_report_text(const MiReport& r, const GroupBundle& b) {
  std::ostringstream out;
  out << r.group << "  (order " << b.group->order() << ", "
      << (r.solvable ? "solvable" : "not solvable") << ", subgroups " << tier_name(r.tier)
      << ")\n";
  out << "searched:";
  for (size_t i = 0; i < r.subgroup_names.size(); i++) {
    out << (i ? ", " : " ") << r.subgroup_names[i];
    if (i < b.maximals.size()) out << " (order " << b.maximals[i].group->order() << ")";
  }
  out << "\n";
  for (const CharReport& cr : r.characters) {
    out << "  X." << (cr.chi + 1) << "  degree " << cr.degree.get_str() << "  ";
    switch (cr.verdict) {
      case CharVerdict::kLinear:
        out << "linear";
        break;
      case CharVerdict::kExcluded:
        out << "excluded (the normal subgroup lies in the kernel)";
        break;
      case CharVerdict::kMi:
        out << "mi  <- " << cr.witness->subgroup_name << ", lambda degree "
            << cr.witness->lambda_degree.get_str() << ", m = " << cr.witness->m.get_str();
        break;
      case CharVerdict::kNotMi:
        out << "not mi";
        if (!cr.obstructions.empty()) {
          out << " (obstructions:";
          for (uint32_t c : cr.obstructions) out << " " << b.classes->label(c);
          out << ")";
        }
        break;
    }
    out << "\n";
  }
  out << "mi-group: " << (r.mi_group ? "yes" : "no") << "\n";
  if (r.m_group)
    out << "m-group: " << (*r.m_group ? "yes" : "no") << "\n";
  else
    out << "m-group: not computed (order above the subgroup enumeration cap)\n";
  if (r.tier == SubgroupTier::kSupplied) out << "note: " << kSuppliedListCaveat << "\n";
  return out.str();
}

nlohmann::json m_group_json(const MiReport& r, uint64_t checksum) {
  nlohmann::json j;
  j["group"] = r.group;
  j["solvable"] = r.solvable;
  j["is_m_group"] = r.m_group ? nlohmann::json(*r.m_group) : nlohmann::json(nullptr);
  j["corpus_checksum"] = checksum;
  return j;
}

std::string m_group_text(const MiReport& r) {
  std::ostringstream out;
  out << r.group << ": " << (r.solvable ? "solvable" : "not solvable") << ", m-group: ";
  if (r.m_group)
    out << (*r.m_group ? "yes" : "no");
  else
    out << "not computed (order above the subgroup enumeration cap)";
  out << "\n";
  return out.str();
}

nlohmann::json checks_json(const std::vector<CheckOutcome>& checks, uint64_t checksum) {
  nlohmann::json j;
  int pass = 0, fail = 0, skip = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckOutcome& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.status;
    e["detail"] = c.detail;
    arr.push_back(e);
    if (c.status == "pass")
      pass++;
    else if (c.status == "fail")
      fail++;
    else
      skip++;
  }
  j["checks"] = arr;
  j["passed"] = pass;
  j["failed"] = fail;
  j["skipped"] = skip;
  j["total"] = checks.size();
  j["all_pass"] = (pass == static_cast<int>(checks.size()));
  j["corpus_checksum"] = checksum;
  return j;
}

std::string checks_text(const std::vector<CheckOutcome>& checks) {
  std::ostringstream out;
  int pass = 0;
  for (const CheckOutcome& c : checks) {
    out << "[" << c.status << "] " << c.name;
    for (size_t i = c.name.size(); i < 28; i++) out << ' ';
    out << " " << c.detail;
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << c.ms;
    out << "  (" << ms.str() << " ms)\n";
    if (c.status == "pass") pass++;
  }
  out << pass << "/" << checks.size() << " passed\n";
  return out.str();
}

nlohmann::json corpus_list_json(const Corpus& c) {
  nlohmann::json j;
  j["corpus_checksum"] = c.checksum;
  nlohmann::json groups = nlohmann::json::array();
  for (const CorpusGroup& g : c.groups) {
    nlohmann::json e;
    e["name"] = g.name;
    e["degree"] = g.degree;
    e["order"] = g.expected_order;
    size_t maximal = 0;
    for (const CorpusSubgroup& s : g.subgroups)
      if (s.claimed_maximal) maximal++;
    e["subgroup_records"] = g.subgroups.size();
    e["maximal_records"] = maximal;
    groups.push_back(e);
  }
  j["groups"] = groups;
  return j;
}

std::string corpus_list_text(const Corpus& c) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", "degree", "order", "subgroup records"});
  for (const CorpusGroup& g : c.groups) {
    size_t maximal = 0;
    for (const CorpusSubgroup& s : g.subgroups)
      if (s.claimed_maximal) maximal++;
    std::string subs = std::to_string(g.subgroups.size());
    if (maximal) subs += " (" + std::to_string(maximal) + " maximal)";
    rows.push_back({g.name, std::to_string(g.degree), std::to_string(g.expected_order), subs});
  }
  std::ostringstream head;
  head << "corpus checksum " << c.checksum << ", " << c.groups.size() << " groups\n";
  return head.str() + render_columns(rows);
}

}  // namespace mig
