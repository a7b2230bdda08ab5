#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "causex/theory.hpp"

namespace causex::oracle {

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive application of the initial-case and transitivity rules with
/// a reflexive IS-A relation. Refuses theories whose edge-symbol count
/// exceeds `max_symbols`.
///
/// Two element-wise reductions are applied, both justified by causal and
/// IS-A implications alone:
///  - the witness δ is dropped from {α, δ} when α implies δ;
///  - composing (α,β,Φ) with (β,γ,Ψ) gives Φ ∪ (Ψ \ {β}), since every
///    derived Φ already contains a member implying β.
std::vector<ExplanationAtom> derive_all(const Theory& t, std::size_t max_symbols = 10);

/// Subset-minimal sets per (from,to), then removal of any set that
/// element-wise entails a sibling without being entailed back.
std::vector<ExplanationAtom> optimal_subset(const std::vector<ExplanationAtom>& atoms,
                                            const Theory& t);

}  // namespace causex::oracle
