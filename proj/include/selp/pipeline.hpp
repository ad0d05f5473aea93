#pragma once

#include <string>
#include <vector>

#include "selp/core.hpp"
#include "selp/ground.hpp"
#include "selp/reduction.hpp"
#include "selp/witness.hpp"

namespace selp {

// Witnesses sharing the same set of g/2 atoms, i.e. the same guess.
struct WitnessGroup {
    std::vector<std::string> guess_atoms; // sorted g/2 atom strings
    std::vector<std::vector<std::string>> answer_sets; // member names, deduped
};

struct GroupedWorldViews {
    std::vector<WitnessGroup> groups; // ordered by guess_atoms
};

// Buckets witnesses by their g/2 atoms; the answer set of each witness is
// the sorted list of first arguments of its v_check1(_,1) atoms.
GroupedWorldViews group_witnesses(const WitnessSet& ws);

struct PipelineOptions {
    BssMode bss = BssMode::Naive;
    unsigned td_seed = 0;
    bool decompose = true;
    Budget budget{};
};

// Full translation route: reduce, split rules, ground, enumerate projected
// answer sets, group them into world views. Output order matches the
// exhaustive solver (guesses by ascending choice bitmask over elitof(p)).
std::vector<WorldView> world_views_via_reduction(const ElpProgram& p,
                                                 const PipelineOptions& opt = {},
                                                 long limit = -1);

bool consistent_via_reduction(const ElpProgram& p, const PipelineOptions& opt = {});

std::string format_world_views(const ElpProgram& p, const std::vector<WorldView>& views);

} // namespace selp
