// Named constructors behind the command line. The grammar is fixed and
// small: a head word picks the constructor, the remaining tokens are exact
// rational literals "p/q", and bracketed lists hold comma- or
// semicolon-separated elements. Nothing here evaluates anything; these
// calls only assemble the lazy objects.
#pragma once

#include "slowreal/continuous_fn.hpp"
#include "slowreal/open_sets.hpp"

#include <string>
#include <vector>

namespace slowreal {

// Rational literals use parse_rational from rational.hpp; when a literal
// inside a spec fails to parse, the error names its byte position in the
// spec string.

// Function specs:
//   identity | abs | const q | affine a b | poly [c0,c1,...] |
//   hat-gallery | step-gallery
// hat-gallery is the spike train with centers 1/(n+2); step-gallery is the
// colouring-driven sign step plus identity whose bisection root revises at
// stage 5. Unknown heads throw, listing the available names.
ContinuousFn make_function(const std::string& spec);
std::vector<std::string> function_names();

// Open-set specs:
//   ball a r | interval a b | union [spec; spec; ...] |
//   gallery:quiet | gallery:recurring
// The gallery entries are members of the shrinking-ball family: "quiet"
// certifies membership of 0 once its colour stops recurring, "recurring"
// never does.
OpenSetCode make_open_set(const std::string& spec);
std::vector<std::string> open_set_names();

// Cover specs (for the subcover search):
//   list [open-set spec; ...] | gallery:two-ball | gallery:adversarial
// two-ball covers [0, 1] with balls at 0 and 1; adversarial admits only a
// ball whose radius shrinks with the stage, so no admission persists.
std::vector<OpenSetCode> make_cover(const std::string& spec);
std::vector<std::string> cover_names();

}  // namespace slowreal
