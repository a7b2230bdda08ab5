#include "causex/theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace causex {

Literal truth(const Symbol& s, bool positive) { return {LiteralAtom{s}, positive}; }

Literal causal(const Symbol& cause, const Symbol& effect, bool positive) {
  return {LiteralAtom{CausalAtom{cause, effect}}, positive};
}

std::string render(const LiteralAtom& atom) {
  if (const auto* s = std::get_if<Symbol>(&atom)) return "true(" + s->text() + ")";
  const auto& c = std::get<CausalAtom>(atom);
  return "cause(" + c.cause.text() + "," + c.effect.text() + ")";
}

std::string render(const Literal& lit) { return (lit.positive ? "" : "-") + render(lit.atom); }

Clause Clause::of(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return Clause{std::move(lits)};
}

bool Clause::tautology() const {
  for (std::size_t i = 0; i + 1 < literals.size(); ++i)
    if (literals[i].atom == literals[i + 1].atom) return true;
  return false;
}

std::string render(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " v ";
    out += render(c.literals[i]);
  }
  return out;
}

bool KindDeclarations::empty() const noexcept {
  return onekind.empty() && allkind.empty() && all_onekind.empty() && propkind.empty() &&
         restricted.empty() && kind_par.empty() && objects.empty();
}

bool KindDeclarations::declares_predicate(std::string_view p) const {
  const std::string key(p);
  return onekind.contains(key) || allkind.contains(key) || all_onekind.contains(key) ||
         propkind.contains(key);
}

void Theory::add_clause(Clause c) {
  if (c.literals.size() >= 2) disjunctive_facts.insert(c);
  clauses.insert(std::move(c));
}

SymbolUniverse symbol_universe(const Theory& t) {
  SymbolUniverse u;
  for (const auto& c : t.causal) {
    u.symbol_e.insert(c.cause);
    u.symbol_e.insert(c.effect);
  }
  for (const auto& o : t.ontology) {
    u.symbol_e.insert(o.sub);
    u.symbol_e.insert(o.super);
  }
  u.symbol = u.symbol_e;
  u.symbol.insert(t.declared_symbols.begin(), t.declared_symbols.end());

  auto add_atom = [&](const LiteralAtom& a) {
    if (const auto* s = std::get_if<Symbol>(&a)) {
      u.symbol.insert(*s);
    } else {
      const auto& c = std::get<CausalAtom>(a);
      u.symbol.insert(c.cause);
      u.symbol.insert(c.effect);
    }
  };
  for (const auto& f : t.facts) add_atom(f.atom);
  for (const auto& c : t.clauses)
    for (const auto& l : c.literals) add_atom(l.atom);
  for (const auto& c : t.disjunctive_facts)
    for (const auto& l : c.literals) add_atom(l.atom);
  for (const auto& a : t.completion_atoms) add_atom(a);
  return u;
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::generated: return "generated";
    case Status::optimal: return "optimal";
    case Status::verified: return "verified";
  }
  return "?";
}

std::optional<Status> status_from_string(std::string_view s) noexcept {
  if (s == "generated") return Status::generated;
  if (s == "optimal") return Status::optimal;
  if (s == "verified") return Status::verified;
  return std::nullopt;
}

ExplanationAtom ExplanationAtom::make(Symbol from, Symbol to, ConditionSet conditions,
                                      Status status) {
  if (conditions.empty()) throw EmptyConditionSet();
  if (!conditions.contains(from))
    throw std::logic_error("explanation atom conditions " + conditions.text() +
                           " do not contain '" + from.text() + "'");
  return ExplanationAtom{std::move(from), std::move(to), std::move(conditions), status, {}};
}

AtomKeySet keys_of(const std::vector<ExplanationAtom>& atoms) {
  AtomKeySet out;
  for (const auto& a : atoms) out.emplace(a.from, a.to, a.conditions);
  return out;
}

}  // namespace causex
