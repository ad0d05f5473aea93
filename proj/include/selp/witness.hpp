#pragma once

#include <string>
#include <vector>

namespace selp {

// A ground atom split into predicate and argument strings, e.g.
// "g(neg(a),1)" -> pred "g", args {"neg(a)", "1"}.
struct GroundAtomView {
    std::string pred;
    std::vector<std::string> args;
};

GroundAtomView parse_ground_atom(const std::string& text);

// A list of projected answer sets, each a list of ground atom strings.
struct WitnessSet {
    std::vector<std::vector<std::string>> witnesses;
};

// Accepts either the clasp JSON output envelope (--outf=2), reading
// Call[*].Witnesses[*].Value, or a plain JSON array of arrays of strings.
WitnessSet parse_witness_json(const std::string& text);

}  // namespace selp
