#pragma once

#include <vector>

#include "selp/asp.hpp"

namespace selp {

// Splits one rule into a chain of shorter rules along a tree decomposition
// of its variable co-occurrence graph, joining the pieces through
// tmp_<rule_idx>_<node> interface predicates.  Variables a piece cannot bind
// on its own get a tmp_<rule_idx>_d<k> domain predicate derived from the
// original positive body.  The join over the interfaces reproduces exactly
// the instances of the original rule.
std::vector<NonGroundRule> decompose_rule(const NonGroundRule& r, int rule_idx);

// Applies decompose_rule to every rule (1-based indices), keeping show marks.
NonGroundProgram decompose_program(const NonGroundProgram& p);

} // namespace selp
