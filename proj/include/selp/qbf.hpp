#pragma once

#include <string>
#include <vector>

#include "selp/core.hpp"

namespace selp {

struct QbfLit {
    int var = 0;
    bool neg = false;
    auto operator<=>(const QbfLit&) const = default;
};

// Prenex CNF with quantifier prefix "exists x, forall y, exists z"; any of
// the three blocks may be empty.  names[v] is the print name of variable v.
struct Qbf3 {
    std::vector<int> x, y, z;
    std::vector<std::string> names; // index 0 unused
    std::vector<std::vector<QbfLit>> clauses;

    int var_count() const {
        return names.empty() ? 0 : static_cast<int>(names.size()) - 1;
    }
};

// QDIMACS with at most three quantifier blocks fitting the e-a-e pattern.
// Unquantified variables become outermost existentials.
Qbf3 parse_qdimacs_eae(const std::string& text);
std::string render_qdimacs(const Qbf3& q);

// Reassigns every variable to a uniformly drawn block.
Qbf3 split_blocks_random(const Qbf3& q, unsigned seed);

// Splits clauses longer than three literals, chaining through fresh
// innermost existentials named s1, s2, ...
Qbf3 normalize_3cnf(const Qbf3& q);

// Adds a fresh universal w<j> positively to clause j.  Validity is
// unchanged, and the result satisfies is_restricted by construction.
Qbf3 extend(const Qbf3& q);

// True when substituting true for every universal turns the matrix into a
// tautology (checked exhaustively; capped at 20 remaining variables).
bool is_restricted(const Qbf3& q);

// Epistemic program that is consistent exactly when q is valid; q has to be
// restricted for this correspondence (pass check=false to skip verifying).
ElpProgram qbf_to_elp(const Qbf3& q, bool check = true);

// Exhaustive exists-forall-exists evaluation; capped at 20 variables.
bool qbf_validity_bruteforce(const Qbf3& q);

} // namespace selp
