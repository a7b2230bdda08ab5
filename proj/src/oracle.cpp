#include "causex/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace causex::oracle {

namespace {

using Mask = std::uint64_t;

// Edge symbols and reflexive-transitive relations, built with plain
// Floyd-Warshall so nothing is shared with the closure engine.
struct Universe {
  std::vector<Symbol> symbols;
  std::vector<std::vector<bool>> isa;     // reflexive, transitive
  std::vector<std::vector<bool>> implies; // reflexive, transitive

  explicit Universe(const Theory& t) {
    std::set<Symbol> s;
    for (const auto& c : t.causal) s.insert({c.cause, c.effect});
    for (const auto& o : t.ontology) s.insert({o.sub, o.super});
    symbols.assign(s.begin(), s.end());
    const auto n = symbols.size();
    isa.assign(n, std::vector<bool>(n, false));
    implies.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) isa[i][i] = implies[i][i] = true;
    for (const auto& o : t.ontology) {
      isa[at(o.sub)][at(o.super)] = true;
      implies[at(o.sub)][at(o.super)] = true;
    }
    for (const auto& c : t.causal) implies[at(c.cause)][at(c.effect)] = true;
    warshall(isa);
    warshall(implies);
  }

  std::size_t at(const Symbol& s) const {
    return static_cast<std::size_t>(std::lower_bound(symbols.begin(), symbols.end(), s) - symbols.begin());
  }

  static void warshall(std::vector<std::vector<bool>>& r) {
    const auto n = r.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j]) r[i][j] = true;
  }
};

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<ExplanationAtom> to_atoms(const std::set<std::tuple<std::size_t, std::size_t, Mask>>& raw,
                                      const std::vector<Symbol>& symbols) {
  std::vector<ExplanationAtom> out;
  for (const auto& [a, g, m] : raw) {
    std::vector<Symbol> members;
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (m & bit(i)) members.push_back(symbols[i]);
    out.push_back(ExplanationAtom::make(symbols[a], symbols[g], canonicalize(std::move(members))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ExplanationAtom> derive_all(const Theory& t, std::size_t max_symbols) {
  const Universe u(t);
  const auto n = u.symbols.size();
  if (n > max_symbols || n > 64)
    throw BoundExceeded("oracle refuses " + std::to_string(n) + " symbols (bound " +
                        std::to_string(std::min<std::size_t>(max_symbols, 64)) + ")");

  using Atom = std::tuple<std::size_t, std::size_t, Mask>;
  std::set<Atom> derived;
  std::vector<Atom> work;
  auto add = [&](Atom a) {
    if (derived.insert(a).second) work.push_back(a);
  };

  // Initial case: cause(α,β), δ IS-A β, δ IS-A γ  ->  α expl γ because {α,δ}.
  for (const auto& c : t.causal) {
    const auto alpha = u.at(c.cause), beta = u.at(c.effect);
    for (std::size_t delta = 0; delta < n; ++delta) {
      if (!u.isa[delta][beta]) continue;
      const Mask set = u.implies[alpha][delta] ? bit(alpha) : bit(alpha) | bit(delta);
      for (std::size_t gamma = 0; gamma < n; ++gamma)
        if (u.isa[delta][gamma]) add({alpha, gamma, set});
    }
  }

  // Transitivity: (α,β,Φ), (β,γ,Ψ) -> (α,γ, Φ ∪ Ψ \ {β}).
  while (!work.empty()) {
    const auto [a, b, phi] = work.back();
    work.pop_back();
    std::vector<Atom> fresh;
    for (const auto& [x, y, psi] : derived) {
      if (x == b) fresh.emplace_back(a, y, phi | (psi & ~bit(b)));
      if (y == a) fresh.emplace_back(x, b, psi | (phi & ~bit(a)));
    }
    for (const auto& f : fresh) add(f);
  }
  return to_atoms(derived, u.symbols);
}

std::vector<ExplanationAtom> optimal_subset(const std::vector<ExplanationAtom>& atoms,
                                            const Theory& t) {
  const Universe u(t);
  auto implied = [&](const Symbol& a, const Symbol& b) {
    if (a == b) return true;
    const auto i = u.at(a), j = u.at(b);
    return i < u.symbols.size() && j < u.symbols.size() && u.symbols[i] == a &&
           u.symbols[j] == b && u.implies[i][j];
  };
  // strong entails weak: each w ∈ weak \ strong has some s ∈ strong \ weak with s -> w.
  auto entails = [&](const std::set<Symbol>& strong, const std::set<Symbol>& weak) {
    for (const auto& w : weak) {
      if (strong.contains(w)) continue;
      bool found = false;
      for (const auto& s : strong)
        if (!weak.contains(s) && implied(s, w)) found = true;
      if (!found) return false;
    }
    return true;
  };

  std::map<std::pair<Symbol, Symbol>, std::set<std::set<Symbol>>> groups;
  for (const auto& a : atoms)
    groups[{a.from, a.to}].insert(std::set<Symbol>(a.conditions.begin(), a.conditions.end()));

  std::vector<ExplanationAtom> out;
  for (const auto& [key, sets] : groups) {
    std::vector<std::set<Symbol>> minimal;
    for (const auto& s : sets) {
      bool has_smaller = false;
      for (const auto& o : sets)
        if (o != s && std::includes(s.begin(), s.end(), o.begin(), o.end())) has_smaller = true;
      if (!has_smaller) minimal.push_back(s);
    }
    for (const auto& s : minimal) {
      bool too_strong = false;
      for (const auto& o : minimal)
        if (o != s && entails(s, o) && !entails(o, s)) too_strong = true;
      if (!too_strong)
        out.push_back(ExplanationAtom::make(key.first, key.second,
                                            canonicalize(std::vector<Symbol>(s.begin(), s.end())),
                                            Status::optimal));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace causex::oracle
