#pragma once

#include <string>
#include <utility>
#include <vector>

#include "selp/error.hpp"

namespace selp {

// First-order term of the emitted ASP dialect. Subtraction is the only
// arithmetic form needed ("1-X", "X-Y").
struct Term {
    enum class Kind { Int, Sym, Fun, Var, Sub };
    Kind kind = Kind::Int;
    int value = 0;           // Int
    std::string name;        // Sym, Fun, Var
    std::vector<Term> args;  // Fun arguments; Sub holds {minuend, subtrahend}

    static Term integer(int v) { return {Kind::Int, v, {}, {}}; }
    static Term sym(std::string n) { return {Kind::Sym, 0, std::move(n), {}}; }
    static Term fun(std::string n, std::vector<Term> a) {
        return {Kind::Fun, 0, std::move(n), std::move(a)};
    }
    static Term var(std::string n) { return {Kind::Var, 0, std::move(n), {}}; }
    static Term sub(Term minuend, Term subtrahend) {
        return {Kind::Sub, 0, {}, {std::move(minuend), std::move(subtrahend)}};
    }
    bool operator==(const Term&) const = default;
};

struct NonGroundAtom {
    std::string pred;
    std::vector<Term> terms;
    bool operator==(const NonGroundAtom&) const = default;
    int arity() const { return static_cast<int>(terms.size()); }
};

struct NonGroundRule {
    std::vector<NonGroundAtom> head; // disjunction; empty for constraints
    std::vector<NonGroundAtom> pos;
    std::vector<NonGroundAtom> neg;  // default-negated body atoms
    bool operator==(const NonGroundRule&) const = default;
};

struct NonGroundProgram {
    std::vector<NonGroundRule> rules;
    // projection directives, rendered as "#show name/arity."
    std::vector<std::pair<std::string, int>> show;
};

// Variable names in first-occurrence order. collect_vars appends without
// deduplication; vars_of returns each name once.
void collect_vars(const Term& t, std::vector<std::string>& out);
void collect_vars(const NonGroundAtom& a, std::vector<std::string>& out);
std::vector<std::string> vars_of(const NonGroundAtom& a);
std::vector<std::string> vars_of(const NonGroundRule& r);

// Every variable of the rule occurs somewhere in a positive body atom.
bool is_safe(const NonGroundRule& r);

// Every variable of the rule occurs in a non-arithmetic position of a
// positive body atom, so a left-to-right join can bind it.
bool is_plainly_safe(const NonGroundRule& r);

std::string render(const Term& t);
std::string render(const NonGroundAtom& a);
std::string render(const NonGroundRule& r);
// One rule per line, "#show" directives last, trailing newline.
std::string render_asp(const NonGroundProgram& p);

long emitted_atom_count(const NonGroundProgram& p);
int max_predicate_arity(const NonGroundProgram& p);

} // namespace selp
