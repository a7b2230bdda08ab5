#include "causex/emit.hpp"

#include <algorithm>

#include "json.hpp"

namespace causex {

std::vector<std::string> theory_lines(const Theory& t) {
  std::vector<std::string> out;
  for (const auto& s : t.declared_symbols) out.push_back("symbol(" + s.text() + ").");
  for (const auto& c : t.causal) out.push_back("cause(" + c.cause.text() + "," + c.effect.text() + ").");
  for (const auto& o : t.ontology) out.push_back("ont(" + o.sub.text() + "," + o.super.text() + ").");
  for (const auto& f : t.facts) out.push_back(render(f) + ".");
  for (const auto& a : t.completion_atoms) out.push_back(render(a) + " v -" + render(a) + ".");
  for (const auto& c : t.clauses) out.push_back(render(c) + ".");

  const auto& k = t.kinds;
  for (const auto& o : k.objects) out.push_back("ont_object(" + o.sub + "," + o.super + ").");
  auto names = [&](const char* fact, const std::set<std::string>& s) {
    for (const auto& n : s) out.push_back(std::string(fact) + "(" + n + ").");
  };
  names("onekind", k.onekind);
  names("allkind", k.allkind);
  names("all_onekind", k.all_onekind);
  names("propkind", k.propkind);
  names("restr", k.restricted);
  for (const auto& p : k.kind_par)
    out.push_back("kindPar(" + p.predicate + "," + p.first + (p.second.empty() ? "" : "," + p.second) + ").");
  return out;
}

namespace {

std::string head(Status s) {
  switch (s) {
    case Status::generated: return "ecSet";
    case Status::optimal: return "ecSetRes";
    case Status::verified: return "explVer";
  }
  return "?";
}

std::string triple(const ExplanationAtom& a) {
  return a.from.text() + "," + a.to.text() + "," + a.conditions.text();
}

// World-tagged atoms after shared ones, by world then canonical key.
bool world_order(const ExplanationAtom& a, const ExplanationAtom& b) {
  if (a.world_index != b.world_index) return a.world_index < b.world_index;
  return a < b;
}

std::vector<ExplanationAtom> sorted(std::vector<ExplanationAtom> v) {
  std::sort(v.begin(), v.end(), world_order);
  return v;
}

// Explanation atoms to list for one world at the report's stage.
std::vector<ExplanationAtom> explanations_in(const Report& r, int world) {
  const auto& src = r.stage == Stage::gen   ? r.generated
                    : r.stage == Stage::opt ? r.optimal
                                            : r.verified;
  std::vector<ExplanationAtom> out;
  for (const auto& a : src)
    if (!a.world_index || *a.world_index == world) out.push_back(a);
  return out;
}

}  // namespace

std::string fact_line(const ExplanationAtom& a) {
  const std::string w = a.world_index ? std::to_string(*a.world_index) + "," : "";
  return head(a.status) + "(" + w + triple(a) + ").";
}

std::vector<std::string> stage_lines(const Report& r) {
  std::vector<std::string> out;
  auto add = [&](const std::vector<ExplanationAtom>& v) {
    for (const auto& a : sorted(v)) out.push_back(fact_line(a));
  };
  switch (r.stage) {
    case Stage::gen:
      add(r.generated);
      break;
    case Stage::opt:
      add(r.optimal);
      break;
    case Stage::verify:
    case Stage::all:
      add(r.optimal);
      add(r.verified);
      for (const auto& v : r.verdicts)
        if (v.brave) out.push_back("brave(" + triple(v.atom) + ").");
      for (const auto& v : r.verdicts)
        if (v.cautious) out.push_back("cautious(" + triple(v.atom) + ").");
      break;
  }
  return out;
}

std::string emit(const Report& r, Format f) {
  if (f == Format::text) {
    std::string out;
    for (const auto& l : theory_lines(r.theory)) out += l + "\n";
    for (const auto& l : stage_lines(r)) out += l + "\n";
    return out;
  }

  using nlohmann::json;
  auto conds = [](const ConditionSet& c) {
    json a = json::array();
    for (const auto& s : c) a.push_back(s.text());
    return a;
  };

  json worlds = json::array();
  for (const auto& w : r.worlds) {
    json facts = json::array();
    for (const auto& [s, v] : w.truth) facts.push_back(render(truth(s, v)));
    for (const auto& l : w.chosen)
      if (!l.is_truth()) facts.push_back(render(l));
    json expl = json::array();
    for (const auto& a : explanations_in(r, w.index))
      expl.push_back({{"from", a.from.text()},
                      {"to", a.to.text()},
                      {"conditions", conds(a.conditions)},
                      {"status", std::string(to_string(a.status))}});
    worlds.push_back({{"index", w.index}, {"facts", facts}, {"explanations", expl}});
  }

  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"from", v.atom.from.text()},
                        {"to", v.atom.to.text()},
                        {"conditions", conds(v.atom.conditions)},
                        {"brave", v.brave},
                        {"cautious", v.cautious},
                        {"worlds", v.verified_in}});

  json doc = {{"theory", theory_lines(r.theory)},
              {"stage", stage_lines(r)},
              {"worlds", worlds},
              {"verdicts", verdicts}};
  return doc.dump(2) + "\n";
}

}  // namespace causex
