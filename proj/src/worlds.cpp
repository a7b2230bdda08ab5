#include "causex/worlds.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace causex {

Truth World::truth_of(const Symbol& s) const {
  auto it = truth.find(s);
  if (it == truth.end()) return Truth::unknown;
  return it->second ? Truth::yes : Truth::no;
}

Truth World::causal_of(const CausalAtom& c) const {
  auto it = causal_truth.find(c);
  if (it == causal_truth.end()) return Truth::unknown;
  return it->second ? Truth::yes : Truth::no;
}

Truth World::value(const Literal& lit) const {
  const Truth t = lit.is_truth() ? truth_of(std::get<Symbol>(lit.atom))
                                 : causal_of(std::get<CausalAtom>(lit.atom));
  if (t == Truth::unknown || lit.positive) return t;
  return t == Truth::yes ? Truth::no : Truth::yes;
}

WorldOverflow::WorldOverflow(std::size_t b)
    : std::runtime_error("world count exceeds --max-worlds bound of " + std::to_string(b)),
      bound(b) {}

namespace {

using Option = std::vector<Literal>;

std::vector<Option> options_for(const Clause& c, bool inclusive) {
  std::vector<Option> out;
  const auto n = c.literals.size();
  for (const auto& l : c.literals) out.push_back({l});
  if (!inclusive || n > 20) return out;
  // Larger subsets by increasing size, lexicographic within a size.
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Option o;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) o.push_back(c.literals[i]);
      out.push_back(std::move(o));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

// Assigns a literal; false on a direct conflict.
bool assign(World& w, const Literal& l) {
  if (l.is_truth()) {
    auto [it, fresh] = w.truth.emplace(std::get<Symbol>(l.atom), l.positive);
    return fresh || it->second == l.positive;
  }
  auto [it, fresh] = w.causal_truth.emplace(std::get<CausalAtom>(l.atom), l.positive);
  return fresh || it->second == l.positive;
}

bool violates(const World& w, const Clause& c) {
  return std::all_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return w.value(l) == Truth::no; });
}

}  // namespace

World propagate_truth(World w, const ClosureRelations& c) {
  std::vector<SymbolId> yes, no;
  for (const auto& [s, v] : w.truth)
    if (auto id = c.index.find(s)) (v ? yes : no).push_back(*id);

  auto set = [&](SymbolId id, bool v) {
    auto [it, fresh] = w.truth.emplace(c.index.symbol(id), v);
    if (!fresh && it->second != v) w.consistent = false;
  };
  // impco is transitive, so one hop from each seed reaches the closure.
  for (SymbolId i : yes)
    for (SymbolId j : c.impco.row(i)) set(j, true);
  const SymbolId n = static_cast<SymbolId>(c.index.size());
  for (SymbolId j : no)
    for (SymbolId i = 0; i < n; ++i)
      if (c.impco.contains(i, j)) set(i, false);
  return w;
}

std::vector<World> enumerate_worlds(const Theory& t, const WorldOptions& opts) {
  std::vector<std::vector<Option>> points;
  if (opts.disjunctions_generate)
    for (const auto& d : t.disjunctive_facts)
      if (!d.tautology()) points.push_back(options_for(d, opts.inclusive_disjunction));
  for (const auto& a : t.completion_atoms) points.push_back({{Literal{a, true}}, {Literal{a, false}}});

  std::size_t combos = 1;
  for (const auto& p : points) {
    if (p.empty()) continue;
    if (combos > std::numeric_limits<std::size_t>::max() / p.size()) throw WorldOverflow(opts.max_worlds);
    combos *= p.size();
  }
  if (combos > opts.max_worlds) throw WorldOverflow(opts.max_worlds);

  std::map<std::set<CausalAtom>, ClosureRelations> closures;
  std::set<std::set<Literal>> seen;
  std::vector<World> worlds;
  std::vector<std::size_t> digit(points.size(), 0);

  for (std::size_t n = 0; n < combos; ++n) {
    World w;
    for (std::size_t p = 0; p < points.size(); ++p)
      for (const auto& l : points[p][digit[p]]) w.chosen.insert(l);

    // Odometer, first choice point most significant.
    for (std::size_t p = points.size(); p-- > 0;) {
      if (++digit[p] < points[p].size()) break;
      digit[p] = 0;
    }
    if (!seen.insert(w.chosen).second) continue;

    bool ok = true;
    for (const auto& c : t.causal) w.causal_truth.emplace(c, true);
    for (const auto& f : t.facts) ok = ok && assign(w, f);
    for (const auto& l : w.chosen) ok = ok && assign(w, l);
    if (!ok) continue;

    for (const auto& [c, present] : w.causal_truth)
      if (present) w.causal.insert(c);

    auto it = closures.find(w.causal);
    if (it == closures.end()) it = closures.emplace(w.causal, compute_closures(t, w.causal)).first;
    w = propagate_truth(std::move(w), it->second);
    if (!w.consistent) continue;

    if (std::any_of(t.clauses.begin(), t.clauses.end(), [&](const Clause& c) { return violates(w, c); }))
      continue;

    w.index = static_cast<int>(worlds.size()) + 1;
    worlds.push_back(std::move(w));
  }
  return worlds;
}

std::vector<ExplanationAtom> verify(const std::vector<ExplanationAtom>& atoms, const World& w) {
  std::vector<ExplanationAtom> out;
  for (const auto& a : atoms) {
    // explSuppr: some condition is false in this world.
    const bool suppressed = std::any_of(a.conditions.begin(), a.conditions.end(),
                                        [&](const Symbol& s) { return w.truth_of(s) == Truth::no; });
    if (suppressed) continue;
    auto v = a;
    v.status = Status::verified;
    v.world_index = w.index;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Verdict> brave_cautious(const std::vector<ExplanationAtom>& candidates,
                                    const std::vector<ExplanationAtom>& verified,
                                    const std::vector<World>& worlds) {
  if (worlds.empty()) throw NoSurvivingWorld();

  std::map<AtomKeySet::value_type, std::pair<Status, std::set<int>>> hits;
  for (const auto& a : candidates)
    hits.try_emplace({a.from, a.to, a.conditions}, a.status, std::set<int>{});
  for (const auto& a : verified)
    if (a.world_index)
      hits.try_emplace({a.from, a.to, a.conditions}, Status::optimal, std::set<int>{})
          .first->second.second.insert(*a.world_index);

  std::vector<Verdict> out;
  for (auto& [key, hit] : hits) {
    Verdict v;
    const auto& [from, to, conds] = key;
    v.atom = ExplanationAtom::make(from, to, conds, hit.first);
    v.verified_in = std::move(hit.second);
    v.brave = !v.verified_in.empty();
    v.cautious = std::all_of(worlds.begin(), worlds.end(),
                             [&](const World& w) { return v.verified_in.contains(w.index); });
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace causex
