#include "causex/closure.hpp"

#include <bit>
#include <stdexcept>

namespace causex {

SymbolIndex::SymbolIndex(const std::set<Symbol>& symbols) : symbols_(symbols.begin(), symbols.end()) {
  ids_.reserve(symbols_.size());
  for (SymbolId i = 0; i < symbols_.size(); ++i) ids_.emplace(symbols_[i], i);
}

std::optional<SymbolId> SymbolIndex::find(const Symbol& s) const {
  auto it = ids_.find(s);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SymbolId SymbolIndex::id(const Symbol& s) const {
  auto it = ids_.find(s);
  if (it == ids_.end()) throw std::out_of_range("unknown symbol '" + s.text() + "'");
  return it->second;
}

PairRelation::PairRelation(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

std::vector<SymbolId> PairRelation::row(SymbolId i) const {
  std::vector<SymbolId> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[i * words_ + w];
    while (bits) {
      out.push_back(static_cast<SymbolId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<SymbolId, SymbolId>> PairRelation::pairs() const {
  std::vector<std::pair<SymbolId, SymbolId>> out;
  for (SymbolId i = 0; i < n_; ++i)
    for (SymbolId j : row(i)) out.emplace_back(i, j);
  return out;
}

std::size_t PairRelation::count() const {
  std::size_t c = 0;
  for (auto w : rows_) c += std::popcount(w);
  return c;
}

void PairRelation::close_transitively() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (SymbolId i = 0; i < n_; ++i) {
      for (SymbolId j : row(i)) {
        if (j == i) continue;
        for (std::size_t w = 0; w < words_; ++w) {
          auto& dst = rows_[i * words_ + w];
          const auto merged = dst | rows_[j * words_ + w];
          if (merged != dst) {
            dst = merged;
            changed = true;
          }
        }
      }
    }
  }
}

bool ClosureRelations::implies(const Symbol& a, const Symbol& b) const {
  auto i = index.find(a);
  auto j = index.find(b);
  return i && j && impco.contains(*i, *j);
}

std::set<SymbolPair> ClosureRelations::to_pairs(const PairRelation& r) const {
  std::set<SymbolPair> out;
  for (auto [i, j] : r.pairs()) out.emplace(index.symbol(i), index.symbol(j));
  return out;
}

namespace {

PairRelation strict_part(const PairRelation& impco) {
  PairRelation s(impco.size());
  for (auto [i, j] : impco.pairs())
    if (!impco.contains(j, i)) s.insert(i, j);
  return s;
}

std::set<Symbol> symbols_of(const std::set<SymbolPair>& pairs) {
  std::set<Symbol> out;
  for (const auto& [a, b] : pairs) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

}  // namespace

ClosureRelations compute_closures(const Theory& t, const std::set<CausalAtom>& causal) {
  ClosureRelations c;
  auto universe = symbol_universe(t);
  for (const auto& a : causal) {
    universe.symbol.insert(a.cause);
    universe.symbol.insert(a.effect);
  }
  c.index = SymbolIndex(universe.symbol);
  const std::size_t n = c.index.size();

  c.in_symbol_e.assign(n, false);
  for (const auto& s : universe.symbol_e) c.in_symbol_e[c.index.id(s)] = true;

  c.ontt = PairRelation(n);
  for (const auto& o : t.ontology) c.ontt.insert(c.index.id(o.sub), c.index.id(o.super));
  c.ontt.close_transitively();

  c.impco = PairRelation(n);
  for (const auto& o : t.ontology) c.impco.insert(c.index.id(o.sub), c.index.id(o.super));
  for (const auto& a : causal) {
    const auto i = c.index.id(a.cause), j = c.index.id(a.effect);
    c.impco.insert(i, j);
    // Per-world causal sets may hold atoms the theory lists only as
    // disjuncts; they are edge symbols in that world.
    c.in_symbol_e[i] = true;
    c.in_symbol_e[j] = true;
  }
  for (SymbolId i = 0; i < n; ++i)
    if (c.in_symbol_e[i]) c.impco.insert(i, i);
  c.impco.close_transitively();

  c.impcos = strict_part(c.impco);
  return c;
}

ClosureRelations compute_closures(const Theory& t) { return compute_closures(t, t.causal); }

std::set<SymbolPair> ont_closure(const std::set<OntAtom>& ontology) {
  Theory t;
  t.ontology = ontology;
  const auto c = compute_closures(t);
  return c.to_pairs(c.ontt);
}

std::set<SymbolPair> impco_closure(const Theory& t, const std::set<Symbol>& symbol_e) {
  const auto c = compute_closures(t);
  auto out = c.to_pairs(c.impco);
  for (const auto& s : symbol_e) out.emplace(s, s);
  return out;
}

std::set<SymbolPair> strict_impco(const std::set<SymbolPair>& impco) {
  const SymbolIndex index(symbols_of(impco));
  PairRelation r(index.size());
  for (const auto& [a, b] : impco) r.insert(index.id(a), index.id(b));
  std::set<SymbolPair> out;
  for (auto [i, j] : strict_part(r).pairs()) out.emplace(index.symbol(i), index.symbol(j));
  return out;
}

}  // namespace causex
