#include "causex/validate.hpp"

#include <map>

namespace causex {

namespace {

bool has_cycle(const std::set<OntAtom>& ontology) {
  std::map<Symbol, std::vector<Symbol>> succ;
  for (const auto& o : ontology) succ[o.sub].push_back(o.super);

  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<Symbol, int> state;
  std::vector<std::pair<Symbol, std::size_t>> stack;
  for (const auto& [root, _] : succ) {
    if (state[root]) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = succ[node];
      if (next < out.size()) {
        const Symbol child = out[next++];
        int& s = state[child];
        if (s == 1) return true;
        if (s == 0) {
          s = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_theory(const Theory& t, ValidationOptions opts) {
  ValidationReport r;

  for (const auto& o : t.ontology)
    if (o.sub == o.super) r.errors.push_back("reflexive ontology atom ont(" + o.sub.text() + "," + o.sub.text() + ")");

  for (const auto& c : t.causal)
    if (c.cause == c.effect) r.warnings.push_back("self-cause cause(" + c.cause.text() + "," + c.cause.text() + ")");

  for (const auto& c : t.clauses) {
    if (c.literals.empty()) r.errors.push_back("empty clause");
    else if (c.tautology()) r.warnings.push_back("tautology dropped: " + render(c));
  }
  for (const auto& c : t.disjunctive_facts)
    if (c.literals.empty()) r.errors.push_back("empty clause");

  if (has_cycle(t.ontology))
    r.warnings.push_back("ontology contains an IS-A cycle; its members become mutually implied");

  const auto universe = symbol_universe(t);
  std::set<std::string> flat, predicates;
  for (const auto& s : universe.symbol) {
    if (s.structured()) predicates.insert(std::string(s.predicate()));
    else flat.insert(s.text());
  }
  for (const auto& p : predicates) {
    if (flat.contains(p))
      r.warnings.push_back("'" + p + "' is used both as a propositional symbol and as a predicate");
    if (opts.lifting && !t.kinds.declares_predicate(p) && !t.kinds.restricted.contains(p))
      r.errors.push_back("structured symbols use predicate '" + p + "' which has no kind declaration");
  }
  return r;
}

Theory drop_tautologies(Theory t) {
  std::erase_if(t.clauses, [](const Clause& c) { return c.tautology(); });
  std::erase_if(t.disjunctive_facts, [](const Clause& c) { return c.tautology(); });
  return t;
}

}  // namespace causex
