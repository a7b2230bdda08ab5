#include <gtest/gtest.h>

#include <map>
#include <random>

#include "causex/generator.hpp"
#include "causex/optimizer.hpp"
#include "fixtures.hpp"

using namespace causex;

namespace {

InitialExplanation I(const char* i, const char* j, const char* e) { return {Symbol(i), Symbol(j), Symbol(e)}; }

bool has(const std::vector<ExplanationAtom>& v, const char* from, const char* to, ConditionSet s) {
  return keys_of(v).contains({Symbol(from), Symbol(to), s});
}

std::set<InitialExplanation> all_inits(const Theory& t, const ClosureRelations& c) {
  auto inits = ecinit_base(t, c);
  auto extra = ecinit_double_ontology(t, c, inits);
  inits.insert(extra.begin(), extra.end());
  return inits;
}

// The same composition rules without the "not ecSet(I,J,Set1)" guard,
// iterated naively to a fixpoint.
AtomKeySet unguarded(const Theory& t) {
  const auto c = compute_closures(t);
  const auto inits = all_inits(t, c);
  const auto absorbed = dominated_witnesses(t, c, ecinit_base(t, c));
  AtomKeySet state = keys_of(seed_ecsets(inits));
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [i, k, s] : AtomKeySet(state)) {
      for (const auto& in : inits) {
        if (in.from != k) continue;
        auto members = s.members();
        if (in.extra != k) members.push_back(in.extra);
        grew |= state.emplace(i, in.to, canonicalize(members)).second;
      }
      for (const auto& ab : absorbed)
        if (ab.from == k && s.contains(ab.extra)) grew |= state.emplace(i, ab.to, s).second;
    }
  }
  return state;
}

std::vector<ExplanationAtom> atoms_of(const AtomKeySet& keys) {
  std::vector<ExplanationAtom> out;
  for (const auto& [f, t, s] : keys) out.push_back(ExplanationAtom::make(f, t, s));
  return out;
}

}  // namespace

TEST(EcinitBase, SingleCause) {
  Theory t;
  t.causal.insert({Symbol("a"), Symbol("b")});
  EXPECT_EQ(ecinit_base(t, compute_closures(t)), (std::set<InitialExplanation>{I("a", "b", "a")}));
}

TEST(EcinitBase, DiagramCases) {
  const auto t = fixtures::load("diagram.lp");
  const auto base = ecinit_base(t, compute_closures(t));
  EXPECT_TRUE(base.contains(I("beta2", "gamma1", "gamma1")));
  EXPECT_TRUE(base.contains(I("alpha", "beta2", "alpha")));
}

TEST(EcinitDoubleOntology, DiagramWitnesses) {
  const auto t = fixtures::load("diagram.lp");
  const auto c = compute_closures(t);
  const auto extra = ecinit_double_ontology(t, c, ecinit_base(t, c));
  EXPECT_TRUE(extra.contains(I("beta2", "gamma3", "gamma2")));
  EXPECT_TRUE(extra.contains(I("beta3", "epsilon3", "epsilon1")));
  EXPECT_TRUE(extra.contains(I("beta3", "epsilon3", "epsilon2")));
}

TEST(EcinitDoubleOntology, StrictlyStrongerWitnessDropped) {
  Theory t;
  t.causal.insert({Symbol("i"), Symbol("x")});
  for (auto [a, b] : {std::pair{"e1", "x"}, {"e2", "x"}, {"e1", "j"}, {"e2", "j"}, {"e1", "e2"}})
    t.ontology.insert({Symbol(a), Symbol(b)});
  const auto c = compute_closures(t);
  const auto base = ecinit_base(t, c);
  const auto extra = ecinit_double_ontology(t, c, base);
  EXPECT_TRUE(extra.contains(I("i", "j", "e2")));
  EXPECT_FALSE(extra.contains(I("i", "j", "e1")));
  EXPECT_TRUE(dominated_witnesses(t, c, base).contains(I("i", "j", "e1")));
}

TEST(SeedEcsets, SingletonWins) {
  const auto seeds = seed_ecsets({I("a", "b", "a"), I("a", "b", "e")});
  ASSERT_EQ(seeds.size(), 1u);
  EXPECT_EQ(seeds[0].conditions, conditions({"a"}));
}

TEST(SeedEcsets, PairForWitness) {
  const auto seeds = seed_ecsets({I("beta2", "gamma1", "gamma1")});
  ASSERT_EQ(seeds.size(), 1u);
  EXPECT_EQ(seeds[0].conditions, conditions({"beta2", "gamma1"}));
  EXPECT_TRUE(seed_ecsets({}).empty());
}

TEST(GatherTransitive, SeedsOnly) {
  const auto seeds = seed_ecsets({I("a", "b", "a"), I("c", "d", "c")});
  EXPECT_EQ(gather_transitive(seeds, {I("a", "b", "a"), I("c", "d", "c")}), seeds);
}

TEST(Generate, DiagramPaths) {
  const auto g = generate(fixtures::load("diagram.lp"));
  EXPECT_TRUE(has(g, "alpha", "delta", conditions({"alpha", "gamma1"})));
  EXPECT_TRUE(has(g, "alpha", "delta", conditions({"alpha", "beta1", "gamma1"})));
  for (auto s : {conditions({"alpha", "gamma2"}), conditions({"alpha", "beta3", "epsilon1"}),
                 conditions({"alpha", "beta3", "epsilon2"})})
    EXPECT_TRUE(has(g, "alpha", "delta", s)) << s.text();
}

TEST(Generate, SiblingNotExplained) {
  const auto g = generate(fixtures::load("bells.lp"));
  for (const auto& a : g) EXPECT_FALSE(a.from == Symbol("x") && a.to == Symbol("soft_bell")) << a.conditions.text();
  EXPECT_FALSE(g.empty());
}

TEST(Generate, SingleCauseAndEmpty) {
  Theory t;
  EXPECT_TRUE(generate(t).empty());
  t.causal.insert({Symbol("a"), Symbol("b")});
  const auto g = generate(t);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].conditions, conditions({"a"}));
  EXPECT_EQ(g[0].status, Status::generated);
}

TEST(Generate, StructuralInvariants) {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    const auto t = fixtures::random_theory(rng);
    const auto e = symbol_universe(t).symbol_e;
    const auto g = generate(t);
    EXPECT_EQ(g, generate(t));
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    for (const auto& a : g) {
      EXPECT_TRUE(a.conditions.contains(a.from));
      for (const auto& s : a.conditions) EXPECT_TRUE(e.contains(s));
    }
  }
}

TEST(Generate, GuardNeverChangesOptimizedResult) {
  std::mt19937 rng(23);
  for (int round = 0; round < 300; ++round) {
    const auto t = fixtures::random_theory(rng);
    const auto c = compute_closures(t);
    const auto full = unguarded(t);
    const auto guarded = generate(t);
    const auto kept = keys_of(guarded);
    EXPECT_TRUE(std::includes(full.begin(), full.end(), kept.begin(), kept.end()));
    EXPECT_EQ(keys_of(optimize(guarded, c)), keys_of(optimize(atoms_of(full), c)));
  }
}

TEST(Generate, DiagramGuardCheck) {
  const auto t = fixtures::load("diagram.lp");
  const auto c = compute_closures(t);
  EXPECT_EQ(keys_of(optimize(generate(t), c)), keys_of(optimize(atoms_of(unguarded(t)), c)));
}
