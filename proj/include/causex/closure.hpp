#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causex/theory.hpp"

namespace causex {

using SymbolId = std::uint32_t;
using SymbolPair = std::pair<Symbol, Symbol>;

/// Dense ids for a symbol universe. Ids follow canonical symbol order, so
/// sorting ids sorts symbols.
class SymbolIndex {
 public:
  SymbolIndex() = default;
  explicit SymbolIndex(const std::set<Symbol>& symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& symbol(SymbolId id) const { return symbols_[id]; }
  std::optional<SymbolId> find(const Symbol& s) const;
  SymbolId id(const Symbol& s) const;  // throws std::out_of_range

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<Symbol, SymbolId> ids_;
};

/// Binary relation over [0, n) stored as one bit row per element.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool contains(SymbolId i, SymbolId j) const noexcept {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void insert(SymbolId i, SymbolId j) noexcept { rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  /// Successors of i in increasing order.
  std::vector<SymbolId> row(SymbolId i) const;
  std::vector<std::pair<SymbolId, SymbolId>> pairs() const;
  std::size_t count() const;

  /// Round-based saturation: row(i) |= row(j) for j in row(i) until stable.
  void close_transitively();

  friend bool operator==(const PairRelation&, const PairRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// ontt, impCO and impCOs over the full symbol universe of a theory.
struct ClosureRelations {
  SymbolIndex index;
  /// ids of symbolE members
  std::vector<bool> in_symbol_e;
  PairRelation ontt;
  PairRelation impco;
  PairRelation impcos;

  bool implies(const Symbol& a, const Symbol& b) const;
  std::set<SymbolPair> to_pairs(const PairRelation& r) const;
};

/// Transitive closure of the IS-A links.
std::set<SymbolPair> ont_closure(const std::set<OntAtom>& ontology);

/// Reflexive (on symbol_e) transitive closure of cause ∪ ont.
std::set<SymbolPair> impco_closure(const Theory& t, const std::set<Symbol>& symbol_e);

/// Asymmetric part: {(i,j) ∈ impco | (j,i) ∉ impco}.
std::set<SymbolPair> strict_impco(const std::set<SymbolPair>& impco);

ClosureRelations compute_closures(const Theory& t);

/// Same, with the causal atoms replaced (used for per-world closures).
ClosureRelations compute_closures(const Theory& t, const std::set<CausalAtom>& causal);

}  // namespace causex
