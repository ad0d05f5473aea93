#pragma once

#include <string>
#include <vector>

#include "selp/ground.hpp"

namespace selp {

// Answer sets of a ground disjunctive program, each a sorted vector of atom
// ids.  Enumeration is deterministic; a non-negative limit stops early.
std::vector<std::vector<int>> answer_sets(const GroundProgram& p, long limit = -1);

bool has_answer_set(const GroundProgram& p);

// Answer sets projected onto the atoms matching p.show (all atoms when no
// show marks are present), deduplicated in order of first appearance.  Each
// projection is a sorted vector of ground atom names.
std::vector<std::vector<std::string>> project_answer_sets(const GroundProgram& p,
                                                          long limit = -1);

} // namespace selp
