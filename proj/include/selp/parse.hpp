#pragma once

#include <string>
#include <string_view>

#include "selp/core.hpp"

namespace selp {

enum class Dialect {
    Not, // epistemic negation written "$not$"
    Km,  // modal operators "K$" / "M$" instead of "$not$"
};

// Parses EASP text into a validated, duplicate-normalized program.
// Grammar (both dialects):
//   program  := rule*
//   rule     := [head] [":-" body] "."
//   head     := atom ("|" atom)*
//   body     := elem ("," elem)*
// Body elements, Not dialect:
//   elem := ["not"] "$not$" ["not"] atom | ["not"] atom
// Km dialect:
//   elem := ["not"] ("K$" | "M$") atom | ["not"] atom
// "%" starts a comment running to end of line.
ElpProgram parse_easp_not(std::string_view text);
ElpProgram parse_easp_km(std::string_view text);
ElpProgram parse_easp(std::string_view text, Dialect d);

// Renders a program as EASP text, one rule per line, trailing newline.
// Epistemic elements map to "K$"/"M$" in the Km dialect:
//   eneg a -> "not K$ a"      not eneg a -> "K$ a"
//   eneg not a -> "M$ a"      not eneg not a -> "not M$ a"
std::string render_elp(const ElpProgram& p, Dialect d);

} // namespace selp
