#pragma once

#include <cstdint>
#include <vector>

#include "selp/core.hpp"

namespace selp {

// Size caps for the exhaustive solver; exceeding them raises Error.
struct OracleLimits {
    int max_atoms = 20;
    int max_elits = 16;
};

// Rule of an epistemic reduct over atom bitmasks (atom i is bit i-1).
// Double default negation acts like a positive atom at the candidate level,
// triple like a single negation at the model level.
struct ReductRule {
    uint32_t head = 0;
    uint32_t pos = 0;
    uint32_t neg = 0;
    uint32_t dneg = 0;
    uint32_t tneg = 0;
    bool always_satisfied = false;
};

std::vector<ReductRule> epistemic_reduct(const ElpProgram& p, const Guess& phi);

// Satisfaction of r judged at model m for its default negations and at
// candidate n for everything else.
bool sat_two_level(const ReductRule& r, uint32_t m, uint32_t n);

// Answer sets of a reduct, ascending as bitmasks.
std::vector<uint32_t> answer_sets_of_reduct(const std::vector<ReductRule>& rules,
                                            int atom_count);

// Checks the candidate conditions for phi; on success optionally returns the
// reduct's answer sets, sorted lexicographically as atom lists.
bool is_candidate_world_view(const ElpProgram& p, const Guess& phi,
                             std::vector<Interpretation>* answer_sets_out = nullptr);

// All world views, ordered by the guess as a bitmask over elit indices.
std::vector<WorldView> enumerate_world_views(const ElpProgram& p,
                                             const OracleLimits& limits = {},
                                             long limit = -1);

bool is_consistent(const ElpProgram& p, const OracleLimits& limits = {});

} // namespace selp
