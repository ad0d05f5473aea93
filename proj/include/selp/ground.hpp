#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "selp/asp.hpp"
#include "selp/error.hpp"

namespace selp {

// Caps for the internal grounder; exceeding either raises BudgetError.
struct Budget {
    long max_rules = 2'000'000;
    long max_atoms = 100'000;
};

struct GroundRule {
    std::vector<int> head;
    std::vector<int> pos;
    std::vector<int> neg;
};

struct GroundProgram {
    std::vector<std::string> atom_names; // id -> printable ground atom
    std::unordered_map<std::string, int> atom_ids;
    std::vector<GroundRule> rules;
    std::vector<std::pair<std::string, int>> show; // carried projection marks

    int atom_count() const { return static_cast<int>(atom_names.size()); }
    int intern(const std::string& name);
    int find(const std::string& name) const; // -1 when absent
    std::string render() const;
};

// Instantiates a safe non-ground program over its own ground terms, keeping
// only rules whose positive body is possibly derivable.  Negative body atoms
// that can never be derived are dropped as satisfied.
GroundProgram ground(const NonGroundProgram& p, const Budget& budget = {});

} // namespace selp
