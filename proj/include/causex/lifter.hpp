#pragma once

#include <set>
#include <string>
#include <vector>

#include "causex/theory.hpp"

namespace causex {

struct LiftResult {
  std::set<OntAtom> atoms;
  std::vector<std::string> warnings;
};

/// Expands object-level IS-A links into IS-A links between structured
/// symbols, according to each predicate's parameter kind:
///
///   onekind(P):     ont([P,X],[P,Y])            for ont_object(X,Y)
///   allkind(P):     ont([P,Y],[P,X])            for ont_object(X,Y)
///   propkind:       ont([A],[B])                for ont_object(A,B), both propkind
///   all_onekind(P): ont([P,X,Y],[P,X1,Y1])      X1 IS-A X, Y IS-A Y1
///
/// For all_onekind the first argument ranges over one object sort and the
/// second over another (sorts are the connected components of the object
/// ontology). Each position may also keep its anchor object unchanged; the
/// anchors are the objects that have a declared super. The atom whose two
/// sides coincide is never produced.
///
/// `used` lists the theory's symbols so that structured symbols whose
/// predicate has no kind get a warning.
LiftResult lift(const KindDeclarations& kinds, const std::set<Symbol>& used = {});

/// Keeps, for restricted predicates, only atoms whose source arguments are
/// an admissible kindPar tuple.
LiftResult apply_restrictions(const std::set<OntAtom>& lifted, const KindDeclarations& kinds);

/// lift + apply_restrictions, merged into the theory's ontology.
Theory apply_lifting(Theory t, std::vector<std::string>* warnings = nullptr);

}  // namespace causex
