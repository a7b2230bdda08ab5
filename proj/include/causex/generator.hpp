#pragma once

#include <set>
#include <vector>

#include "causex/closure.hpp"
#include "causex/theory.hpp"

namespace causex {

/// "from explains to because {from, extra}" obtained without transitivity.
/// extra == from stands for the singleton {from}.
struct InitialExplanation {
  Symbol from;
  Symbol to;
  Symbol extra;

  friend bool operator==(const InitialExplanation&, const InitialExplanation&) = default;
  friend auto operator<=>(const InitialExplanation&, const InitialExplanation&) = default;
};

/// The four single-witness rules plus the (i,j,j) case:
///   (i,j,i) <- cause(i,j)
///   (i,j,i) <- cause(i,x), ontt(j,x), impco(i,j)
///   (i,j,i) <- cause(i,x), ontt(x,j)
///   (i,j,i) <- cause(i,x), ontt(e,x), ontt(e,j), impco(i,e)
///   (i,j,j) <- cause(i,x), ontt(j,x), not impco(i,j)
std::set<InitialExplanation> ecinit_base(const Theory& t, const ClosureRelations& c);

/// Common sub-concept witnesses e for pairs the base rules leave open,
/// minus those strictly implying a sibling witness.
std::set<InitialExplanation> ecinit_double_ontology(const Theory& t, const ClosureRelations& c,
                                                    const std::set<InitialExplanation>& base);

/// The witnesses ecinit_double_ontology discards as strictly stronger than a
/// rival. They still matter when the gathered set already contains them.
std::set<InitialExplanation> dominated_witnesses(const Theory& t, const ClosureRelations& c,
                                                 const std::set<InitialExplanation>& base);

/// Initial condition sets. {i} wins outright; otherwise {i,j} is emitted
/// together with every surviving {i,e} (those are impco-equivalent to j).
std::vector<ExplanationAtom> seed_ecsets(const std::set<InitialExplanation>& inits);

/// Least fixpoint of condition gathering along initial explanations:
///   (i,k,S), init (k,j,e2), e2 != k   ->  (i,j,S ∪ {e2})   unless (i,j,S) exists
///   (i,k,S), init (k,j,k)             ->  (i,j,S)
///   (i,k,S), absorbed (k,j,e), e ∈ S  ->  (i,j,S)
std::vector<ExplanationAtom> gather_transitive(const std::vector<ExplanationAtom>& seeds,
                                               const std::set<InitialExplanation>& inits,
                                               const std::set<InitialExplanation>& absorbed = {});

/// Stage 1. Output is in canonical order with status = generated.
std::vector<ExplanationAtom> generate(const Theory& t);
std::vector<ExplanationAtom> generate(const Theory& t, const ClosureRelations& c);

}  // namespace causex
