#include "mig/corpus.hpp"

#include <set>
#include <utility>

#include "json.hpp"
#include "mig/errors.hpp"
#include "mig/util.hpp"

namespace mig {

using nlohmann::json;

namespace {

std::vector<Perm> parse_generators(const json& j, int degree, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ParseError("corpus: " + where + ": generators must be a non-empty array");
  std::vector<Perm> gens;
  for (const auto& g : j) {
    if (!g.is_string()) throw ParseError("corpus: " + where + ": generator must be a string");
    gens.push_back(Perm::parse(degree, g.get<std::string>()));
  }
  return gens;
}

}  // namespace

bool Corpus::has(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return true;
  return false;
}

const CorpusGroup& Corpus::find(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return g;
  throw UnknownGroup("corpus has no group named '" + name + "'");
}

Corpus load_corpus(const std::string& path) {
  Corpus corpus;
  corpus.path = path;
  std::string text = read_file(path);
  corpus.checksum = fnv1a64(text.data(), text.size());

  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("corpus: invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("groups") || !root["groups"].is_array())
    throw ParseError("corpus: top level must be an object with a 'groups' array");

  std::set<std::string> names;
  for (const auto& jg : root["groups"]) {
    CorpusGroup g;
    if (!jg.contains("name") || !jg["name"].is_string())
      throw ParseError("corpus: group without a name");
    g.name = jg["name"].get<std::string>();
    if (!names.insert(g.name).second)
      throw ParseError("corpus: duplicate group name '" + g.name + "'");
    if (!jg.contains("degree") || !jg["degree"].is_number_unsigned())
      throw ParseError("corpus: group '" + g.name + "' needs an unsigned degree");
    g.degree = jg["degree"].get<int>();
    if (!jg.contains("expected_order") || !jg["expected_order"].is_number_unsigned())
      throw ParseError("corpus: group '" + g.name + "' needs an unsigned expected_order");
    g.expected_order = jg["expected_order"].get<uint64_t>();
    g.notes = jg.value("notes", std::string());
    g.generators = parse_generators(jg.at("generators"), g.degree, g.name);
    g.group = std::make_shared<const PermGroup>(g.degree, g.generators);
    if (g.group->order() != g.expected_order)
      throw OrderMismatch("corpus: group '" + g.name + "' has order " +
                          std::to_string(g.group->order()) + ", expected " +
                          std::to_string(g.expected_order));

    std::set<std::string> sub_names;
    for (const auto& js : jg.value("subgroups", json::array())) {
      CorpusSubgroup s;
      if (!js.contains("name") || !js["name"].is_string())
        throw ParseError("corpus: subgroup of '" + g.name + "' without a name");
      s.name = js["name"].get<std::string>();
      if (!sub_names.insert(s.name).second)
        throw ParseError("corpus: duplicate subgroup name '" + s.name + "' in '" + g.name + "'");
      s.claimed_maximal = js.value("claimed_maximal", false);
      s.generators = parse_generators(js.at("generators"), g.degree, g.name + "/" + s.name);
      for (const Perm& x : s.generators)
        if (!g.group->contains(x))
          throw SubgroupNotContained("corpus: subgroup '" + s.name + "' of '" + g.name +
                                     "' has a generator outside the group");
      s.group = std::make_shared<const PermGroup>(g.degree, s.generators);
      g.subgroups.push_back(std::move(s));
    }
    corpus.groups.push_back(std::move(g));
  }
  return corpus;
}

std::string default_corpus_path() { return MIG_DEFAULT_CORPUS; }

std::string corpus_json_text(const std::vector<CorpusGroup>& groups) {
  json root;
  root["groups"] = json::array();
  for (const auto& g : groups) {
    json jg;
    jg["name"] = g.name;
    jg["degree"] = g.degree;
    jg["expected_order"] = g.expected_order;
    if (!g.notes.empty()) jg["notes"] = g.notes;
    jg["generators"] = json::array();
    for (const Perm& x : g.generators) jg["generators"].push_back(x.to_string());
    jg["subgroups"] = json::array();
    for (const auto& s : g.subgroups) {
      json js;
      js["name"] = s.name;
      js["claimed_maximal"] = s.claimed_maximal;
      js["generators"] = json::array();
      for (const Perm& x : s.generators) js["generators"].push_back(x.to_string());
      jg["subgroups"].push_back(js);
    }
    root["groups"].push_back(jg);
  }
  return root.dump(2) + "\n";
}

}  // namespace mig
