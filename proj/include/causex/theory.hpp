#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "causex/symbol.hpp"

namespace causex {

/// "cause causes effect". Self-causes are accepted (the validator warns).
struct CausalAtom {
  Symbol cause;
  Symbol effect;

  friend bool operator==(const CausalAtom&, const CausalAtom&) = default;
  friend auto operator<=>(const CausalAtom&, const CausalAtom&) = default;
};

/// "sub IS-A super".
struct OntAtom {
  Symbol sub;
  Symbol super;

  friend bool operator==(const OntAtom&, const OntAtom&) = default;
  friend auto operator<=>(const OntAtom&, const OntAtom&) = default;
};

/// The atom under a literal: true(s) or cause(a,b).
using LiteralAtom = std::variant<Symbol, CausalAtom>;

struct Literal {
  LiteralAtom atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }
  bool is_truth() const noexcept { return std::holds_alternative<Symbol>(atom); }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    // Positive before negative.
    return b.positive <=> a.positive;
  }
};

Literal truth(const Symbol& s, bool positive = true);
Literal causal(const Symbol& cause, const Symbol& effect, bool positive = true);

/// "true(a)", "-true(a)", "cause(a,b)", "-cause(a,b)".
std::string render(const Literal& lit);
std::string render(const LiteralAtom& atom);

/// A disjunction of literals, canonically ordered and duplicate-free.
struct Clause {
  std::vector<Literal> literals;

  static Clause of(std::vector<Literal> lits);
  bool tautology() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.literals <=> b.literals; }
};

std::string render(const Clause& c);

/// Object-level IS-A link used by predicate lifting.
struct ObjectOntAtom {
  std::string sub;
  std::string super;

  friend bool operator==(const ObjectOntAtom&, const ObjectOntAtom&) = default;
  friend auto operator<=>(const ObjectOntAtom&, const ObjectOntAtom&) = default;
};

/// An admissible argument tuple for a restricted predicate. Unary
/// predicates leave `second` empty.
struct KindParameter {
  std::string predicate;
  std::string first;
  std::string second;

  friend bool operator==(const KindParameter&, const KindParameter&) = default;
  friend auto operator<=>(const KindParameter&, const KindParameter&) = default;
};

struct KindDeclarations {
  std::set<std::string> onekind;
  std::set<std::string> allkind;
  std::set<std::string> all_onekind;
  std::set<std::string> propkind;  // object names
  std::set<std::string> restricted;
  std::set<KindParameter> kind_par;
  /// ont_object facts in input order; order matters for argument sorts.
  std::vector<ObjectOntAtom> objects;

  bool empty() const noexcept;
  bool declares_predicate(std::string_view p) const;

  friend bool operator==(const KindDeclarations&, const KindDeclarations&) = default;
};

/// The premise set: causal atoms, ontology, and the world theory.
struct Theory {
  std::set<CausalAtom> causal;
  std::set<OntAtom> ontology;
  std::set<Literal> facts;
  std::set<Clause> clauses;
  /// Clauses with two or more literals; these may generate worlds.
  std::set<Clause> disjunctive_facts;
  std::set<Symbol> declared_symbols;
  KindDeclarations kinds;
  /// Atoms completed with "x v -x".
  std::set<LiteralAtom> completion_atoms;

  /// Adds a clause to `clauses` and, with two or more literals, to
  /// `disjunctive_facts` as well.
  void add_clause(Clause c);

  friend bool operator==(const Theory&, const Theory&) = default;
};

struct SymbolUniverse {
  std::set<Symbol> symbol;
  /// Symbols occurring in causal or ontological atoms.
  std::set<Symbol> symbol_e;
};

SymbolUniverse symbol_universe(const Theory& t);

enum class Status : std::uint8_t { generated, optimal, verified };

std::string_view to_string(Status s) noexcept;
std::optional<Status> status_from_string(std::string_view s) noexcept;

/// "from explains to because conditions is possible".
struct ExplanationAtom {
  Symbol from;
  Symbol to;
  ConditionSet conditions;
  Status status = Status::generated;
  /// Set only when status == verified.
  std::optional<int> world_index;

  /// Checks non-emptiness and from ∈ conditions.
  static ExplanationAtom make(Symbol from, Symbol to, ConditionSet conditions,
                              Status status = Status::generated);

  /// Identity ignoring status: (from, to, conditions).
  auto key() const { return std::tie(from, to, conditions); }

  friend bool operator==(const ExplanationAtom&, const ExplanationAtom&) = default;
  friend auto operator<=>(const ExplanationAtom& a, const ExplanationAtom& b) {
    if (auto c = a.key() <=> b.key(); c != 0) return c;
    if (auto c = a.status <=> b.status; c != 0) return c;
    return a.world_index <=> b.world_index;
  }
};

/// Canonical (from, to, conditions) triples, status dropped.
using AtomKeySet = std::set<std::tuple<Symbol, Symbol, ConditionSet>>;
AtomKeySet keys_of(const std::vector<ExplanationAtom>& atoms);

}  // namespace causex
