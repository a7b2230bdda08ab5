#pragma once

#include <vector>

#include "causex/closure.hpp"
#include "causex/theory.hpp"

namespace causex {

/// Within each (from,to) group, drops every set that strictly contains a
/// sibling set.
std::vector<ExplanationAtom> prune_supersets(const std::vector<ExplanationAtom>& atoms);

/// True when every e2 in `weak` \ `strong` is impco-implied by some e1 in
/// `strong` \ `weak`, i.e. `strong` entails `weak` element-wise.
bool entails_elementwise(const ConditionSet& strong, const ConditionSet& weak,
                         const ClosureRelations& c);

/// Within each (from,to) group, drops a set that element-wise entails a
/// sibling without being entailed back. Survivors are marked optimal.
std::vector<ExplanationAtom> entailment_subsumption(const std::vector<ExplanationAtom>& atoms,
                                                    const ClosureRelations& c);

/// Stage 2: prune_supersets then entailment_subsumption.
std::vector<ExplanationAtom> optimize(const std::vector<ExplanationAtom>& atoms,
                                      const ClosureRelations& c);

}  // namespace causex
