#pragma once

#include <vector>

#include "selp/asp.hpp"
#include "selp/core.hpp"
#include "selp/graphs.hpp"

namespace selp {

// How the proper-subset test between candidate and submodel is laid out:
// one chain over all atoms in index order, or chains following a tree
// decomposition of the atom co-occurrence graph (keeps rule widths small).
enum class BssMode { Naive, TdGuided };

struct ReductionOptions {
    BssMode bss = BssMode::Naive;
    bool emit_projection = true;
    unsigned td_seed = 0; // tie shuffling for the bag decomposition
};

// Ground term naming an epistemic literal: atom name, or neg(name) for a
// negated inner literal.
Term lit_const(const ElpProgram& p, const Literal& l);

// Appends the satisfaction chain of rule `rule_idx` (1-based) to out. xvals
// and yvals hold the truth terms per atom (position atom-1): default
// negations are judged against xvals, everything else against yvals. The
// chain's final value lands in `result` instead of a fresh variable.
void b_sat(const ElpProgram& p, int rule_idx, const std::vector<Term>& xvals,
           const std::vector<Term>& yvals, const Term& result,
           std::vector<NonGroundAtom>& out);

// Appends the test "Y is a proper subset of X" over atoms 1..atom_count,
// using variables X<i>/Y<i>.
void b_ss_naive(int atom_count, std::vector<NonGroundAtom>& out);
void b_ss_td(const TreeDecomposition& td, int atom_count,
             std::vector<NonGroundAtom>& out);

// Translates an epistemic program into a non-ground ASP program of bounded
// predicate arity whose answer sets, projected onto g/2 and v_check1/2,
// encode the world views.
NonGroundProgram reduce(const ElpProgram& p, const ReductionOptions& opt = {});

} // namespace selp
