#include "causex/lifter.hpp"

#include <algorithm>
#include <map>

namespace causex {

namespace {

// Connected components of the undirected object graph, numbered by first
// appearance in the ont_object list.
std::map<std::string, int> object_sorts(const std::vector<ObjectOntAtom>& objects) {
  std::map<std::string, std::string> parent;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& o : objects) {
    parent.try_emplace(o.sub, o.sub);
    parent.try_emplace(o.super, o.super);
    auto a = find(o.sub), b = find(o.super);
    if (a != b) parent[a] = b;
  }
  std::map<std::string, int> root_number, sort;
  for (const auto& o : objects) {
    for (const auto* name : {&o.sub, &o.super}) {
      auto [it, _] = root_number.try_emplace(find(*name), static_cast<int>(root_number.size()));
      sort[*name] = it->second;
    }
  }
  return sort;
}

}  // namespace

LiftResult lift(const KindDeclarations& kinds, const std::set<Symbol>& used) {
  LiftResult r;
  const auto& objects = kinds.objects;

  std::map<std::string, std::set<std::string>> supers;
  for (const auto& o : objects) supers[o.sub].insert(o.super);

  for (const auto& p : kinds.onekind)
    for (const auto& o : objects) r.atoms.insert({Symbol(p, {o.sub}), Symbol(p, {o.super})});

  for (const auto& p : kinds.allkind)
    for (const auto& o : objects) r.atoms.insert({Symbol(p, {o.super}), Symbol(p, {o.sub})});

  for (const auto& o : objects)
    if (kinds.propkind.contains(o.sub) && kinds.propkind.contains(o.super))
      r.atoms.insert({Symbol(o.sub, {}), Symbol(o.super, {})});

  const auto sort = object_sorts(objects);
  const int n_sorts = sort.empty() ? 0 : 1 + std::max_element(sort.begin(), sort.end(), [](auto& a, auto& b) {
                                                   return a.second < b.second;
                                                 })->second;
  for (const auto& p : kinds.all_onekind) {
    // Sorts of the two argument positions: from kindPar when given,
    // otherwise the first two sorts in declaration order.
    std::set<int> first_sorts, second_sorts;
    for (const auto& kp : kinds.kind_par) {
      if (kp.predicate != p) continue;
      if (auto it = sort.find(kp.first); it != sort.end()) first_sorts.insert(it->second);
      if (auto it = sort.find(kp.second); it != sort.end()) second_sorts.insert(it->second);
    }
    if (first_sorts.empty() && second_sorts.empty() && n_sorts > 0) {
      first_sorts.insert(0);
      second_sorts.insert(n_sorts > 1 ? 1 : 0);
    }

    for (const auto& [x1, x_supers] : supers) {
      if (!first_sorts.contains(sort.at(x1))) continue;
      for (const auto& [y, y_supers] : supers) {
        if (!second_sorts.contains(sort.at(y))) continue;
        std::vector<std::string> xs{x1}, y1s{y};
        xs.insert(xs.end(), x_supers.begin(), x_supers.end());
        y1s.insert(y1s.end(), y_supers.begin(), y_supers.end());
        for (const auto& x : xs)
          for (const auto& y1 : y1s)
            if (x != x1 || y1 != y) r.atoms.insert({Symbol(p, {x, y}), Symbol(p, {x1, y1})});
      }
    }
  }

  std::set<std::string> warned;
  for (const auto& s : used) {
    if (!s.structured() || s.arity() == 0) continue;
    const std::string p(s.predicate());
    if (!kinds.declares_predicate(p) && warned.insert(p).second)
      r.warnings.push_back("predicate '" + p + "' has no kind declaration and never yields ontological atoms");
  }
  return r;
}

LiftResult apply_restrictions(const std::set<OntAtom>& lifted, const KindDeclarations& kinds) {
  LiftResult r;
  for (const auto& p : kinds.restricted) {
    const bool any = std::any_of(kinds.kind_par.begin(), kinds.kind_par.end(),
                                 [&](const KindParameter& k) { return k.predicate == p; });
    if (!any) r.warnings.push_back("restricted predicate '" + p + "' has no kindPar entries; all its atoms are dropped");
  }
  for (const auto& a : lifted) {
    const std::string p(a.sub.predicate());
    if (!a.sub.structured() || !kinds.restricted.contains(p)) {
      r.atoms.insert(a);
      continue;
    }
    const auto args = a.sub.args();
    const KindParameter key{p, args.size() > 0 ? args[0] : "", args.size() > 1 ? args[1] : ""};
    if (kinds.kind_par.contains(key)) r.atoms.insert(a);
  }
  return r;
}

Theory apply_lifting(Theory t, std::vector<std::string>* warnings) {
  const auto universe = symbol_universe(t);
  auto lifted = lift(t.kinds, universe.symbol);
  auto kept = apply_restrictions(lifted.atoms, t.kinds);
  t.ontology.insert(kept.atoms.begin(), kept.atoms.end());
  if (warnings) {
    warnings->insert(warnings->end(), lifted.warnings.begin(), lifted.warnings.end());
    warnings->insert(warnings->end(), kept.warnings.begin(), kept.warnings.end());
  }
  return t;
}

}  // namespace causex
