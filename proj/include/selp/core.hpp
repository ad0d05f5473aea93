#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "selp/error.hpp"

namespace selp {

// Atom indices are 1-based; 0 means "no atom".
using AtomIdx = int;

// Marker used for atoms invented by normalize_duplicates. Input atom names
// containing it are rejected so invented names can never collide.
inline constexpr std::string_view kDupMarker = "__dup";

bool valid_atom_name(std::string_view name);

class AtomTable {
public:
    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }
    bool valid(AtomIdx i) const { return i >= 1 && i <= size(); }

    const std::string& name(AtomIdx i) const;
    // Returns 0 when the name is unknown.
    AtomIdx find(std::string_view name) const;
    // Returns the existing index for known names.
    AtomIdx add(std::string_view name);
    // Invents "<base>__dup<k>" with the smallest k >= 1 that is unused.
    AtomIdx add_duplicate_of(AtomIdx base);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomIdx> index_;
};

struct Literal {
    AtomIdx atom = 0;
    bool negated = false; // classical "not"
    auto operator<=>(const Literal&) const = default;
};

// An epistemic literal "eneg l": "l is not provably true".
struct Elit {
    Literal inner;
    auto operator<=>(const Elit&) const = default;
};

// One body element of an ELP rule: either a plain literal or an epistemic
// literal, the latter optionally under an outer default negation.
struct BodyElement {
    bool epistemic = false;
    Literal lit;             // the literal itself, or the elit's inner literal
    bool outer_negated = false; // only meaningful when epistemic

    static BodyElement literal(Literal l) { return {false, l, false}; }
    static BodyElement elit(Literal inner, bool outer_neg = false) {
        return {true, inner, outer_neg};
    }
    auto operator<=>(const BodyElement&) const = default;
    AtomIdx atom() const { return lit.atom; }
};

struct ElpRule {
    std::vector<AtomIdx> head;       // disjunction; empty for constraints
    std::vector<BodyElement> body;   // ordered as written
    auto operator<=>(const ElpRule&) const = default;
};

struct ElpProgram {
    AtomTable atoms;
    std::vector<ElpRule> rules;
};

struct Diagnostic {
    int rule = -1; // -1 for program-level problems
    std::string message;
};

// Distinct epistemic literals in order of first occurrence.
std::vector<Elit> elitof(const ElpProgram& p);

// Guess: subset of elitof(p), kept in elitof order.
struct Guess {
    std::vector<Elit> chosen;
    bool contains(const Elit& e) const;
    auto operator<=>(const Guess&) const = default;
};

// A set of atoms, sorted ascending.
using Interpretation = std::vector<AtomIdx>;

struct WorldView {
    Guess guess;
    std::vector<Interpretation> answer_sets; // sorted lexicographically
    auto operator<=>(const WorldView&) const = default;
};

// Rewrites every rule so no atom occurs twice in it. Later occurrences are
// replaced by fresh "__dup" atoms; for each fresh atom a' of a the rules
// a' <- a and a <- a' are appended, preserving world views on original atoms.
ElpProgram normalize_duplicates(const ElpProgram& p);

// Structural checks: name validity/uniqueness, index ranges, duplicate atoms
// within a rule. Empty result means the program is well formed.
std::vector<Diagnostic> validate(const ElpProgram& p);

} // namespace selp
