// command-line front end: character tables, induced-character witness
// searches, group-level verdicts, the built-in verification checklist, and
// corpus inspection
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mig/checks.hpp"
#include "mig/context.hpp"
#include "mig/corpus.hpp"
#include "mig/errors.hpp"
#include "mig/report.hpp"
#include "mig/subgroup_lattice.hpp"

namespace {

// exit codes: 0 = success, 1 = a requested property fails to hold,
// 2 = unusable input (bad flags, unknown names, corpus problems)
constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string corpus_path = mig::default_corpus_path();
  bool json = false;
  int jobs = 1;
  uint64_t cap = mig::kSubgroupEnumCap;
};

void emit(const Options& opt, const nlohmann::json& j, const std::string& text) {
  std::fputs(opt.json ? mig::json_text(j).c_str() : text.c_str(), stdout);
}

// resolve --relative: an integer selects the unique normal subgroup of that
// order; anything else names a recorded subgroup, which must be normal
mig::NormalSubgroup resolve_normal(const mig::GroupBundle& b, const std::string& spec) {
  std::vector<mig::NormalSubgroup> normals = mig::normal_subgroups(b.classes);
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    uint64_t order = std::stoull(spec);
    const mig::NormalSubgroup* hit = nullptr;
    for (const mig::NormalSubgroup& n : normals) {
      if (n.order != order) continue;
      if (hit) throw mig::Error("several normal subgroups of order " + spec + "; name one");
      hit = &n;
    }
    if (!hit) throw mig::Error("no normal subgroup of order " + spec);
    return *hit;
  }
  for (const mig::CorpusSubgroup& s : b.record->subgroups) {
    if (s.name != spec) continue;
    for (const mig::NormalSubgroup& n : normals) {
      if (n.order != s.group->order()) continue;
      bool inside = true;
      for (const mig::Perm& p : s.group->generators())
        if (!n.group.contains(p)) inside = false;
      if (inside) return n;
    }
    throw mig::Error("recorded subgroup '" + spec + "' is not normal");
  }
  throw mig::UnknownGroup("no recorded subgroup named '" + spec + "'");
}

int cmd_chartab(mig::Context& ctx, const Options& opt, const std::string& name) {
  const mig::GroupBundle& b = ctx.bundle(name);
  emit(opt, mig::chartab_json(b, ctx.corpus().checksum), mig::chartab_text(b));
  return kOk;
}

int cmd_mi_group(mig::Context& ctx, const Options& opt, const std::string& name,
                 const std::string& relative) {
  const mig::GroupBundle& b = ctx.bundle(name);
  mig::MiReport r;
  if (relative.empty()) {
    r = mig::mi_group_report(name, *b.chars, b.maximals, b.tier, ctx.jobs(),
                             ctx.subgroup_cap());
  } else {
    mig::NormalSubgroup n = resolve_normal(b, relative);
    r = mig::mi_relative_report(name, *b.chars, n, b.maximals, b.tier, ctx.jobs(),
                                ctx.subgroup_cap());
  }
  nlohmann::json j = mig::mi_report_json(r, b, ctx.corpus().checksum);
  std::string text = mig::mi_report_text(r, b);
  if (!relative.empty()) {
    j["relative_to"] = relative;
    text = "relative to " + relative + ":\n" + text;
  }
  emit(opt, j, text);
  return r.mi_group ? kOk : kPropertyFails;
}

int cmd_mi_check(mig::Context& ctx, const Options& opt, const std::string& name, long degree,
                 long index) {
  const mig::GroupBundle& b = ctx.bundle(name);
  mig::MiReport r = mig::mi_group_report(name, *b.chars, b.maximals, b.tier, ctx.jobs(),
                                         ctx.subgroup_cap());
  std::vector<mig::CharReport> selected;
  for (const mig::CharReport& cr : r.characters) {
    if (degree >= 0 && cr.degree != degree) continue;
    if (index >= 0 && cr.chi + 1 != static_cast<uint32_t>(index)) continue;
    selected.push_back(cr);
  }
  if (selected.empty()) throw mig::Error("no character matches the selection");
  r.characters = std::move(selected);
  emit(opt, mig::mi_report_json(r, b, ctx.corpus().checksum), mig::mi_report_text(r, b));
  for (const mig::CharReport& cr : r.characters)
    if (cr.verdict == mig::CharVerdict::kNotMi) return kPropertyFails;
  return kOk;
}

int cmd_m_group(mig::Context& ctx, const Options& opt, const std::string& name) {
  const mig::GroupBundle& b = ctx.bundle(name);
  if (b.group->order() > ctx.subgroup_cap())
    throw mig::CapExceeded("monomiality needs the full lattice; order " +
                           std::to_string(b.group->order()) + " exceeds the cap " +
                           std::to_string(ctx.subgroup_cap()));
  mig::MiReport r;
  r.group = name;
  r.solvable = mig::is_solvable(*b.group);
  r.m_group = mig::is_m_group(b.classes, ctx.jobs(), ctx.subgroup_cap());
  emit(opt, mig::m_group_json(r, ctx.corpus().checksum), mig::m_group_text(r));
  return *r.m_group ? kOk : kPropertyFails;
}

int cmd_verify(mig::Context& ctx, const Options& opt) {
  std::vector<mig::CheckOutcome> checks = mig::run_claim_checks(ctx);
  nlohmann::json j = mig::checks_json(checks, ctx.corpus().checksum);
  emit(opt, j, mig::checks_text(checks));
  return j["all_pass"].get<bool>() ? kOk : kPropertyFails;
}

int cmd_corpus(mig::Context& ctx, const Options& opt, bool check) {
  const mig::Corpus& c = ctx.corpus();
  if (!check) {
    emit(opt, mig::corpus_list_json(c), mig::corpus_list_text(c));
    return kOk;
  }
  // reaching this point means the load-time verification (orders recompute,
  // subgroup containment) already succeeded
  nlohmann::json j;
  j["corpus_checksum"] = c.checksum;
  j["groups_verified"] = c.groups.size();
  j["status"] = "ok";
  std::string text = "corpus ok: " + std::to_string(c.groups.size()) +
                     " groups verified, checksum " + std::to_string(c.checksum) + "\n";
  emit(opt, j, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character-theoretic witness searches for permutation groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--corpus", opt.corpus_path, "corpus file (default: the shipped one)");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--jobs", opt.jobs, "worker threads for table computations")
      ->check(CLI::Range(1, 64));
  app.add_option("--cap", opt.cap,
                 "largest order whose subgroup lattice is enumerated (at most " +
                     std::to_string(mig::kSubgroupEnumCap) + ")");

  std::string name, relative;
  long degree = -1, index = -1;

  CLI::App* chartab = app.add_subcommand("chartab", "print the character table of a group");
  chartab->add_option("name", name, "group name")->required();

  CLI::App* mi_check = app.add_subcommand(
      "mi-check", "decide whether irreducible characters are multiples of induced ones");
  mi_check->add_option("name", name, "group name")->required();
  CLI::Option* odeg = mi_check->add_option("--degree", degree, "select characters by degree");
  mi_check->add_option("--index", index, "select one character by table position (1-based)")
      ->excludes(odeg);

  CLI::App* mi_group = app.add_subcommand(
      "mi-group", "test whether every nonlinear irreducible character has a witness");
  mi_group->add_option("name", name, "group name")->required();
  mi_group->add_option("--relative", relative,
                       "restrict to characters whose kernel misses this normal subgroup "
                       "(recorded subgroup name or order)");

  CLI::App* m_group = app.add_subcommand("m-group", "test monomiality over the full lattice");
  m_group->add_option("name", name, "group name")->required();

  app.add_subcommand("verify-paper", "run the built-in verification checklist");

  CLI::App* corpus = app.add_subcommand("corpus", "inspect the group corpus");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "one line per group");
  corpus->add_subcommand("check", "reload and re-verify the corpus file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (opt.cap > mig::kSubgroupEnumCap)
      throw mig::Error("--cap exceeds the compiled ceiling " +
                       std::to_string(mig::kSubgroupEnumCap));
    mig::Context ctx(mig::load_corpus(opt.corpus_path), opt.jobs, opt.cap);
    if (chartab->parsed()) return cmd_chartab(ctx, opt, name);
    if (mi_check->parsed()) return cmd_mi_check(ctx, opt, name, degree, index);
    if (mi_group->parsed()) return cmd_mi_group(ctx, opt, name, relative);
    if (m_group->parsed()) return cmd_m_group(ctx, opt, name);
    if (app.get_subcommand("verify-paper")->parsed()) return cmd_verify(ctx, opt);
    if (corpus->parsed())
      return cmd_corpus(ctx, opt, corpus->get_subcommand("check")->parsed());
    return kBadInput;
  } catch (const mig::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadInput;
  }
}
