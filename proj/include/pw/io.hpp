#pragma once

#include <iosfwd>
#include <string>

#include "pw/gadgets.hpp"
#include "pw/rules.hpp"
#include "pw/solvers.hpp"
#include "pw/sources.hpp"

namespace pw {

// Line-oriented instance format:
//   candidates: a, b, c
//   rule: borda
//   target: a
//   vote: a>b, b>c
// Rule grammar: scoring <ints...> | plurality | veto | kapproval <k> |
// kveto <k> | borda | copeland <p>/<q> | maximin | bucklin.  `#` starts a
// comment; a bare `vote:` is a fully undetermined vote.  The strict pairs are
// transitively closed on load.
PossibleWinnerInstance parse_instance(const std::string& text);
std::string emit_instance(const PossibleWinnerInstance& inst);

RuleSpec parse_rule(const std::string& text, int m);

// Instance text plus `#` sidecar lines carrying the role map.
std::string emit_gadget(const Gadget& g);

// Source-problem files:
//   sat <n>        followed by `clause: l1 l2 l3` lines (signed 1-based)
//   3dm <m>        followed by `triple: x y z` lines (1-based)
//   mis <d>        followed by `class: v...` and `edge: u v` lines (1-based)
Sat3B2Instance parse_sat(const std::string& text);
ThreeDMInstance parse_3dm(const std::string& text);
MulticoloredISInstance parse_mis(const std::string& text);
std::string emit_sat(const Sat3B2Instance& s);
std::string emit_3dm(const ThreeDMInstance& t);
std::string emit_mis(const MulticoloredISInstance& g);

// Structured result report with stable field order.
std::string format_report(const SolveResult& res, const CandidateSet& cands,
                          long long time_ms);

}  // namespace pw
