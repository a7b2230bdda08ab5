#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>

#include "causex/closure.hpp"
#include "fixtures.hpp"

using namespace causex;

namespace {

SymbolPair P(const char* a, const char* b) { return {Symbol(a), Symbol(b)}; }

struct Pairs {
  std::set<SymbolPair> ontt, impco, impcos;
};

Pairs pairs_of(const ClosureRelations& c) { return {c.to_pairs(c.ontt), c.to_pairs(c.impco), c.to_pairs(c.impcos)}; }

// Plain BFS reachability, one or more steps.
std::set<SymbolPair> bfs_reach(const std::multimap<Symbol, Symbol>& edges) {
  std::set<Symbol> nodes;
  for (const auto& [a, b] : edges) nodes.insert(a), nodes.insert(b);
  std::set<SymbolPair> out;
  for (const auto& s : nodes) {
    std::set<Symbol> seen;
    std::queue<Symbol> q;
    q.push(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      auto [lo, hi] = edges.equal_range(x);
      for (auto it = lo; it != hi; ++it)
        if (seen.insert(it->second).second) q.push(it->second);
    }
    for (const auto& t : seen) out.insert({s, t});
  }
  return out;
}

}  // namespace

TEST(OntClosure, Transitive) {
  auto c = ont_closure({{Symbol("beta1"), Symbol("beta")}, {Symbol("beta"), Symbol("beta2")}});
  EXPECT_TRUE(c.contains(P("beta1", "beta2")));
  EXPECT_TRUE(ont_closure({}).empty());
}

TEST(OntClosure, DiagramEpsilons) {
  const auto c = ont_closure(fixtures::load("diagram.lp").ontology);
  EXPECT_TRUE(c.contains(P("epsilon1", "epsilon3")));
  EXPECT_TRUE(c.contains(P("epsilon1", "epsilon")));
}

TEST(OntClosure, MatchesBfsOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12), m = static_cast<int>(rng() % 25);
    std::set<OntAtom> ont;
    std::multimap<Symbol, Symbol> edges;
    for (int i = 0; i < m; ++i) {
      Symbol a("n" + std::to_string(rng() % n)), b("n" + std::to_string(rng() % n));
      if (a == b) continue;
      if (ont.insert({a, b}).second) edges.emplace(a, b);
    }
    EXPECT_EQ(ont_closure(ont), bfs_reach(edges));
  }
}

TEST(ImpcoClosure, SmallExample) {
  Theory t;
  t.causal.insert({Symbol("a"), Symbol("b")});
  t.ontology.insert({Symbol("b"), Symbol("c")});
  const auto c = impco_closure(t, symbol_universe(t).symbol_e);
  for (auto p : {P("a", "b"), P("b", "c"), P("a", "c"), P("a", "a"), P("b", "b"), P("c", "c")})
    EXPECT_TRUE(c.contains(p)) << p.first.text() << "," << p.second.text();
  EXPECT_FALSE(c.contains(P("c", "a")));
}

TEST(ImpcoClosure, IsolatedSymbolIsReflexive) {
  Theory t;
  const std::set<Symbol> e{Symbol("s")};
  EXPECT_EQ(impco_closure(t, e), (std::set<SymbolPair>{P("s", "s")}));
}

TEST(ImpcoClosure, DiagramReachesGammaNotBack) {
  const auto c = compute_closures(fixtures::load("diagram.lp"));
  EXPECT_TRUE(c.implies(Symbol("alpha"), Symbol("gamma")));
  EXPECT_FALSE(c.implies(Symbol("gamma"), Symbol("alpha")));
}

TEST(StrictImpco, Examples) {
  EXPECT_EQ(strict_impco({P("a", "a"), P("a", "b"), P("b", "b")}), (std::set<SymbolPair>{P("a", "b")}));
  EXPECT_TRUE(strict_impco({P("a", "b"), P("b", "a"), P("a", "a"), P("b", "b")}).empty());
}

TEST(StrictImpco, DiagramBeta1Beta) {
  const auto pairs = pairs_of(compute_closures(fixtures::load("diagram.lp")));
  EXPECT_TRUE(pairs.impcos.contains(P("beta1", "beta")));
  EXPECT_FALSE(pairs.impcos.contains(P("beta", "beta1")));
}

TEST(ImpcoClosure, CycleCollapsesIntoMutualPairs) {
  Theory t;
  t.ontology.insert({Symbol("a"), Symbol("b")});
  t.ontology.insert({Symbol("b"), Symbol("a")});
  const auto pairs = pairs_of(compute_closures(t));
  EXPECT_TRUE(pairs.ontt.contains(P("a", "a")));
  EXPECT_TRUE(pairs.impco.contains(P("a", "b")));
  EXPECT_TRUE(pairs.impco.contains(P("b", "a")));
  EXPECT_TRUE(pairs.impcos.empty());
}

TEST(ImpcoClosure, ReflexiveTransitiveAntisymmetricPart) {
  std::mt19937 rng(3);
  for (int round = 0; round < 300; ++round) {
    const auto t = fixtures::random_theory(rng);
    const auto p = pairs_of(compute_closures(t));
    for (const auto& s : symbol_universe(t).symbol_e) EXPECT_TRUE(p.impco.contains({s, s}));
    for (const auto& [i, j] : p.impco)
      for (const auto& [j2, k] : p.impco)
        if (j == j2) {
          EXPECT_TRUE(p.impco.contains({i, k}));
        }
    for (const auto& [i, j] : p.impcos) EXPECT_FALSE(p.impcos.contains({j, i}));
  }
}

TEST(ImpcoClosure, MonotoneUnderAddedAtoms) {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    auto t = fixtures::random_theory(rng);
    const auto before = pairs_of(compute_closures(t));
    auto more = t;
    const auto extra = fixtures::random_theory(rng);
    more.causal.insert(extra.causal.begin(), extra.causal.end());
    more.ontology.insert(extra.ontology.begin(), extra.ontology.end());
    const auto after = pairs_of(compute_closures(more));
    EXPECT_TRUE(std::includes(after.ontt.begin(), after.ontt.end(), before.ontt.begin(), before.ontt.end()));
    EXPECT_TRUE(std::includes(after.impco.begin(), after.impco.end(), before.impco.begin(), before.impco.end()));
  }
}
