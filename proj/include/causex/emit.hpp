#pragma once

#include <string>
#include <vector>

#include "causex/pipeline.hpp"

namespace causex {

/// Canonical fact lines for a theory, one statement per line. Parsing them
/// back gives the same Theory.
std::vector<std::string> theory_lines(const Theory& t);

/// "ecSet(i,j,{..})." / "ecSetRes(w,i,j,{..})." / "explVer(w,i,j,{..})."
std::string fact_line(const ExplanationAtom& a);

/// Stage artifact lines of a report, in canonical order: explanation facts
/// (world-tagged ones ordered by world first), then brave and cautious
/// summary lines.
std::vector<std::string> stage_lines(const Report& r);

/// Text: theory lines followed by stage lines. The output is a valid input
/// for the next stage.
///
/// JSON: {"theory":[..], "stage":[..], "worlds":[{index, facts,
/// explanations:[{from,to,conditions,status}]}], "verdicts":[{from, to,
/// conditions, brave, cautious, worlds}]}. The reader uses only "theory" and
/// "stage", so JSON chains like text.
std::string emit(const Report& r, Format f);

}  // namespace causex
