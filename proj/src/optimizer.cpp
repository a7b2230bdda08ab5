#include "causex/optimizer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace causex {

namespace {

using IdSet = std::vector<SymbolId>;

// Groups atoms by (from, to), preserving canonical order inside each group.
std::map<std::pair<Symbol, Symbol>, std::vector<const ExplanationAtom*>> group(
    const std::vector<ExplanationAtom>& atoms) {
  std::map<std::pair<Symbol, Symbol>, std::vector<const ExplanationAtom*>> g;
  for (const auto& a : atoms) g[{a.from, a.to}].push_back(&a);
  for (auto& [_, v] : g)
    std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->conditions < b->conditions; });
  return g;
}

// Symbols outside the closure universe only imply themselves; they get ids
// past the end so they never match a relation entry.
class IdMapper {
 public:
  explicit IdMapper(const SymbolIndex& ix) : ix_(ix) {}

  IdSet operator()(const ConditionSet& s) {
    IdSet out;
    out.reserve(s.size());
    for (const auto& m : s) {
      if (auto id = ix_.find(m)) {
        out.push_back(*id);
      } else {
        auto [it, _] = unknown_.try_emplace(m, static_cast<SymbolId>(ix_.size() + unknown_.size()));
        out.push_back(it->second);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const SymbolIndex& ix_;
  std::map<Symbol, SymbolId> unknown_;
};

bool contains(const IdSet& s, SymbolId e) { return std::binary_search(s.begin(), s.end(), e); }

bool entails(const IdSet& strong, const IdSet& weak, const PairRelation& impco) {
  const auto n = impco.size();
  for (SymbolId e2 : weak) {
    if (contains(strong, e2)) continue;
    bool implied = false;
    for (SymbolId e1 : strong) {
      if (contains(weak, e1)) continue;
      if (e1 < n && e2 < n && impco.contains(e1, e2)) {
        implied = true;
        break;
      }
    }
    if (!implied) return false;
  }
  return true;
}

}  // namespace

std::vector<ExplanationAtom> prune_supersets(const std::vector<ExplanationAtom>& atoms) {
  std::set<Symbol> universe;
  for (const auto& a : atoms) universe.insert(a.conditions.begin(), a.conditions.end());
  const SymbolIndex index(universe);
  IdMapper ids(index);

  std::vector<ExplanationAtom> out;
  for (const auto& [_, members] : group(atoms)) {
    std::vector<IdSet> sets;
    sets.reserve(members.size());
    for (const auto* a : members) sets.push_back(ids(a->conditions));
    // Only strictly smaller sets can be strict subsets.
    std::vector<std::size_t> by_size(members.size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](std::size_t x, std::size_t y) { return sets[x].size() < sets[y].size(); });

    for (std::size_t s = 0; s < members.size(); ++s) {
      bool too_large = false;
      for (std::size_t k : by_size) {
        if (sets[k].size() >= sets[s].size()) break;
        if (std::includes(sets[s].begin(), sets[s].end(), sets[k].begin(), sets[k].end())) {
          too_large = true;
          break;
        }
      }
      if (!too_large) out.push_back(*members[s]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool entails_elementwise(const ConditionSet& strong, const ConditionSet& weak,
                         const ClosureRelations& c) {
  IdMapper ids(c.index);
  return entails(ids(strong), ids(weak), c.impco);
}

std::vector<ExplanationAtom> entailment_subsumption(const std::vector<ExplanationAtom>& atoms,
                                                    const ClosureRelations& c) {
  std::vector<ExplanationAtom> out;
  IdMapper ids(c.index);
  for (const auto& [_, members] : group(atoms)) {
    std::vector<IdSet> sets;
    sets.reserve(members.size());
    for (const auto* a : members) sets.push_back(ids(a->conditions));

    for (std::size_t s = 0; s < members.size(); ++s) {
      bool too_strong = false;
      for (std::size_t s1 = 0; s1 < members.size() && !too_strong; ++s1) {
        if (sets[s] == sets[s1]) continue;
        too_strong = entails(sets[s], sets[s1], c.impco) && !entails(sets[s1], sets[s], c.impco);
      }
      if (!too_strong) {
        auto kept = *members[s];
        kept.status = Status::optimal;
        kept.world_index.reset();
        out.push_back(std::move(kept));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ExplanationAtom> optimize(const std::vector<ExplanationAtom>& atoms,
                                      const ClosureRelations& c) {
  return entailment_subsumption(prune_supersets(atoms), c);
}

}  // namespace causex
