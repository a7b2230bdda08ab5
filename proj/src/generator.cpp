#include "causex/generator.hpp"

#include <algorithm>
#include <map>

namespace causex {

namespace {

using IdSet = std::vector<SymbolId>;

struct IdInit {
  SymbolId from, to, extra;
  auto operator<=>(const IdInit&) const = default;
};

IdSet with(IdSet s, SymbolId e) {
  auto it = std::lower_bound(s.begin(), s.end(), e);
  if (it == s.end() || *it != e) s.insert(it, e);
  return s;
}

InitialExplanation to_symbols(const SymbolIndex& ix, const IdInit& i) {
  return {ix.symbol(i.from), ix.symbol(i.to), ix.symbol(i.extra)};
}

}  // namespace

std::set<InitialExplanation> ecinit_base(const Theory& t, const ClosureRelations& c) {
  const auto& ix = c.index;
  const SymbolId n = static_cast<SymbolId>(ix.size());
  std::set<IdInit> out;

  for (const auto& ca : t.causal) {
    const SymbolId i = ix.id(ca.cause), x = ix.id(ca.effect);
    out.insert({i, x, i});
    for (SymbolId j = 0; j < n; ++j) {
      if (c.ontt.contains(j, x)) {
        if (c.impco.contains(i, j)) out.insert({i, j, i});
        else out.insert({i, j, j});
      }
      if (c.ontt.contains(x, j)) out.insert({i, j, i});
    }
    for (SymbolId e = 0; e < n; ++e) {
      if (!c.ontt.contains(e, x) || !c.impco.contains(i, e)) continue;
      for (SymbolId j : c.ontt.row(e)) out.insert({i, j, i});
    }
  }

  std::set<InitialExplanation> res;
  for (const auto& i : out) res.insert(to_symbols(ix, i));
  return res;
}

namespace {

// ecinit3p(i,j,e) :- ecinit(i,e,e), cause(i,x), ontt(e,x), ontt(e,j), not ecinit(i,j,i).
// Returns (kept, dominated) where dominated witnesses strictly imply a rival.
// An (i,j,j) base atom competes as the witness j itself.
std::pair<std::set<InitialExplanation>, std::set<InitialExplanation>> split_witnesses(
    const Theory& t, const ClosureRelations& c, const std::set<InitialExplanation>& base) {
  const auto& ix = c.index;
  const SymbolId n = static_cast<SymbolId>(ix.size());

  std::set<IdInit> have;
  for (const auto& b : base) have.insert({ix.id(b.from), ix.id(b.to), ix.id(b.extra)});

  std::map<std::pair<SymbolId, SymbolId>, std::set<SymbolId>> candidates;
  for (const auto& ca : t.causal) {
    const SymbolId i = ix.id(ca.cause), x = ix.id(ca.effect);
    for (SymbolId e = 0; e < n; ++e) {
      if (!c.ontt.contains(e, x) || !have.contains({i, e, e})) continue;
      for (SymbolId j : c.ontt.row(e)) {
        if (have.contains({i, j, i})) continue;
        candidates[{i, j}].insert(e);
      }
    }
  }

  // nonecinit(i,j,e) :- ecinit3p(i,j,e1), ecinit3p(i,j,e), impCOs(e,e1).
  std::set<InitialExplanation> kept, dominated;
  for (const auto& [ij, es] : candidates) {
    const auto [i, j] = ij;
    auto rivals = es;
    if (have.contains({i, j, j})) rivals.insert(j);
    for (SymbolId e : es) {
      if (e == j) continue;
      const bool strictly_stronger = std::any_of(
          rivals.begin(), rivals.end(), [&](SymbolId e1) { return c.impcos.contains(e, e1); });
      (strictly_stronger ? dominated : kept).insert(to_symbols(ix, {i, j, e}));
    }
  }
  return {std::move(kept), std::move(dominated)};
}

}  // namespace

std::set<InitialExplanation> ecinit_double_ontology(const Theory& t, const ClosureRelations& c,
                                                    const std::set<InitialExplanation>& base) {
  return split_witnesses(t, c, base).first;
}

std::set<InitialExplanation> dominated_witnesses(const Theory& t, const ClosureRelations& c,
                                                 const std::set<InitialExplanation>& base) {
  return split_witnesses(t, c, base).second;
}

std::vector<ExplanationAtom> seed_ecsets(const std::set<InitialExplanation>& inits) {
  std::map<std::pair<Symbol, Symbol>, std::vector<Symbol>> by_pair;
  for (const auto& i : inits) by_pair[{i.from, i.to}].push_back(i.extra);

  std::vector<ExplanationAtom> out;
  for (const auto& [ij, extras] : by_pair) {
    const auto& [i, j] = ij;
    const auto has = [&](const Symbol& s) {
      return std::find(extras.begin(), extras.end(), s) != extras.end();
    };
    if (has(i)) {
      out.push_back(ExplanationAtom::make(i, j, canonicalize({i})));
    } else {
      // {i,j} and the surviving {i,e}; witnesses strictly stronger than j
      // were already removed, the rest are impco-equivalent to j.
      for (const auto& e : extras) out.push_back(ExplanationAtom::make(i, j, canonicalize({i, e})));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExplanationAtom> gather_transitive(const std::vector<ExplanationAtom>& seeds,
                                               const std::set<InitialExplanation>& inits,
                                               const std::set<InitialExplanation>& absorbed) {
  std::set<Symbol> universe;
  for (const auto& s : seeds) {
    universe.insert(s.from);
    universe.insert(s.to);
    universe.insert(s.conditions.begin(), s.conditions.end());
  }
  for (const auto* group : {&inits, &absorbed}) {
    for (const auto& i : *group) {
      universe.insert(i.from);
      universe.insert(i.to);
      universe.insert(i.extra);
    }
  }
  const SymbolIndex ix(universe);

  // Outgoing initial explanations keyed by their source k: (j, e2).
  std::vector<std::vector<std::pair<SymbolId, SymbolId>>> out_of(ix.size());
  for (const auto& i : inits) out_of[ix.id(i.from)].emplace_back(ix.id(i.to), ix.id(i.extra));
  std::vector<std::vector<std::pair<SymbolId, SymbolId>>> absorbed_out_of(ix.size());
  for (const auto& i : absorbed)
    absorbed_out_of[ix.id(i.from)].emplace_back(ix.id(i.to), ix.id(i.extra));

  using Key = std::pair<SymbolId, SymbolId>;
  std::map<Key, std::set<IdSet>> state;
  std::map<Key, std::set<IdSet>> delta;

  for (const auto& s : seeds) {
    IdSet set;
    for (const auto& m : s.conditions) set.push_back(ix.id(m));
    const Key key{ix.id(s.from), ix.id(s.to)};
    if (state[key].insert(set).second) delta[key].insert(std::move(set));
  }

  // Breadth-first rounds over the newly derived atoms, in canonical order.
  while (!delta.empty()) {
    std::map<Key, std::set<IdSet>> next;
    for (const auto& [ik, sets] : delta) {
      const auto [i, k] = ik;
      for (const auto& set : sets) {
        for (const auto& [j, e2] : out_of[k]) {
          auto& target = state[{i, j}];
          IdSet derived;
          if (e2 == k) {
            derived = set;
          } else {
            // "not ecSet(I,J,Set1)": the enlarged set would be a strict
            // superset of an atom already present.
            if (target.contains(set)) continue;
            derived = with(set, e2);
          }
          if (target.insert(derived).second) next[{i, j}].insert(std::move(derived));
        }
        // A pruned witness already present in the set adds nothing.
        for (const auto& [j, e2] : absorbed_out_of[k]) {
          if (!std::binary_search(set.begin(), set.end(), e2)) continue;
          if (state[{i, j}].insert(set).second) next[{i, j}].insert(set);
        }
      }
    }
    delta = std::move(next);
  }

  std::vector<ExplanationAtom> out;
  for (const auto& [key, sets] : state) {
    for (const auto& set : sets) {
      std::vector<Symbol> members;
      members.reserve(set.size());
      for (auto id : set) members.push_back(ix.symbol(id));
      out.push_back(ExplanationAtom::make(ix.symbol(key.first), ix.symbol(key.second),
                                          canonicalize(std::move(members))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExplanationAtom> generate(const Theory& t, const ClosureRelations& c) {
  auto inits = ecinit_base(t, c);
  auto [extra, dominated] = split_witnesses(t, c, inits);
  inits.insert(extra.begin(), extra.end());
  return gather_transitive(seed_ecsets(inits), inits, dominated);
}

std::vector<ExplanationAtom> generate(const Theory& t) { return generate(t, compute_closures(t)); }

}  // namespace causex
