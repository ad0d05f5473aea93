#include "selp/core.hpp"

#include <algorithm>
#include <cctype>

namespace selp {

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

const std::string& AtomTable::name(AtomIdx i) const {
    if (!valid(i)) throw Error("atom index out of range: " + std::to_string(i));
    return names_[static_cast<size_t>(i) - 1];
}

AtomIdx AtomTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? 0 : it->second;
}

AtomIdx AtomTable::add(std::string_view name) {
    if (AtomIdx existing = find(name)) return existing;
    names_.emplace_back(name);
    AtomIdx idx = size();
    index_.emplace(names_.back(), idx);
    return idx;
}

AtomIdx AtomTable::add_duplicate_of(AtomIdx base) {
    const std::string& b = name(base);
    for (int k = 1;; ++k) {
        std::string candidate = b + std::string(kDupMarker) + std::to_string(k);
        if (!find(candidate)) return add(candidate);
    }
}

bool Guess::contains(const Elit& e) const {
    return std::find(chosen.begin(), chosen.end(), e) != chosen.end();
}

std::vector<Elit> elitof(const ElpProgram& p) {
    std::vector<Elit> out;
    for (const ElpRule& r : p.rules) {
        for (const BodyElement& e : r.body) {
            if (!e.epistemic) continue;
            Elit el{e.lit};
            if (std::find(out.begin(), out.end(), el) == out.end()) out.push_back(el);
        }
    }
    return out;
}

ElpProgram normalize_duplicates(const ElpProgram& p) {
    ElpProgram out;
    out.atoms = p.atoms;
    // pairs (original, duplicate) whose equivalence rules are appended at the end
    std::vector<std::pair<AtomIdx, AtomIdx>> links;

    for (const ElpRule& r : p.rules) {
        ElpRule nr;
        std::vector<AtomIdx> seen;
        auto rewrite = [&](AtomIdx a) -> AtomIdx {
            if (std::find(seen.begin(), seen.end(), a) == seen.end()) {
                seen.push_back(a);
                return a;
            }
            AtomIdx fresh = out.atoms.add_duplicate_of(a);
            links.emplace_back(a, fresh);
            return fresh;
        };
        for (AtomIdx h : r.head) nr.head.push_back(rewrite(h));
        for (BodyElement e : r.body) {
            e.lit.atom = rewrite(e.lit.atom);
            nr.body.push_back(e);
        }
        out.rules.push_back(std::move(nr));
    }
    for (auto [orig, dup] : links) {
        out.rules.push_back({{dup}, {BodyElement::literal({orig, false})}});
        out.rules.push_back({{orig}, {BodyElement::literal({dup, false})}});
    }
    return out;
}

std::vector<Diagnostic> validate(const ElpProgram& p) {
    std::vector<Diagnostic> out;
    std::unordered_map<std::string, int> seen_names;
    for (int i = 1; i <= p.atoms.size(); ++i) {
        const std::string& n = p.atoms.name(i);
        bool ok = valid_atom_name(n);
        if (ok && n.find(kDupMarker) != std::string::npos) {
            // invented names are allowed, but only in the canonical shape
            std::string_view rest(n);
            size_t pos = rest.find(kDupMarker);
            std::string_view suffix = rest.substr(pos + kDupMarker.size());
            ok = !suffix.empty() &&
                 std::all_of(suffix.begin(), suffix.end(), [](char c) {
                     return std::isdigit(static_cast<unsigned char>(c));
                 });
        }
        if (!ok) out.push_back({-1, "invalid atom name: '" + n + "'"});
        if (++seen_names[n] == 2)
            out.push_back({-1, "duplicate atom name: '" + n + "'"});
    }
    for (size_t ri = 0; ri < p.rules.size(); ++ri) {
        const ElpRule& r = p.rules[ri];
        std::vector<AtomIdx> used;
        auto check = [&](AtomIdx a) {
            if (!p.atoms.valid(a)) {
                out.push_back({static_cast<int>(ri),
                               "atom index out of range: " + std::to_string(a)});
                return;
            }
            if (std::find(used.begin(), used.end(), a) != used.end()) {
                out.push_back({static_cast<int>(ri),
                               "atom occurs twice in rule: '" + p.atoms.name(a) + "'"});
            }
            used.push_back(a);
        };
        for (AtomIdx h : r.head) check(h);
        for (const BodyElement& e : r.body) check(e.lit.atom);
    }
    return out;
}

} // namespace selp
