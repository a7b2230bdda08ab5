#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "causex/theory.hpp"

namespace causex {

/// Malformed input. `line` is 1-based, 0 when no line applies.
class InputError : public std::runtime_error {
 public:
  InputError(int line, const std::string& what);
  int line;
};

/// Artifacts of an earlier stage found in the input. Atoms read from the
/// four-argument forms carry their world index.
struct StageFacts {
  std::vector<ExplanationAtom> generated;  // ecSet
  std::vector<ExplanationAtom> optimal;    // ecSetRes
  std::vector<ExplanationAtom> verified;   // explVer

  bool empty() const noexcept { return generated.empty() && optimal.empty() && verified.empty(); }
};

struct ParsedInput {
  Theory theory;
  StageFacts stage;
};

/// Fact-file grammar. Statements end with '.', '%' starts a comment, and
/// braces outside an argument list only group statements.
///
///   symbol(a).  cause(a,b).  ont(a,b).  true(a).  -true(a).  -cause(a,b).
///   lit v lit v ... .        where lit is [-]true(s) or [-]cause(s,t)
///   ont_object(x,y).  onekind(p).  allkind(p).  all_onekind(p).
///   propkind(a).  restr(p).  kindPar(p,x,y).  kindPar(p,x).
///
/// Symbols are identifiers or structured "[p,x,y]". "x v -x" declares a
/// completion atom. Stage facts (ecSet, ecSetRes, explVer) are rejected.
Theory parse_theory(std::string_view text);

/// Like parse_theory but also accepts stage facts:
///   ecSet(i,j,{..}).  ecSet(w,i,j,{..}).  ecSetRes(...) likewise.
///   explVer(w,i,j,{..}).
/// brave/cautious summary lines are skipped. Input starting with a JSON object is
/// read as the JSON report format.
ParsedInput parse_input(std::string_view text);

}  // namespace causex
