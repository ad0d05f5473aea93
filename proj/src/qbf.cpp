#include "selp/qbf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace selp {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_blocks(const Qbf3& q) {
    std::vector<bool> seen(q.names.size(), false);
    for (const auto* block : {&q.x, &q.y, &q.z}) {
        for (int v : *block) {
            if (v < 1 || v > q.var_count())
                throw Error("variable " + std::to_string(v) + " out of range");
            if (seen[v])
                throw Error("variable " + std::to_string(v) +
                            " quantified twice");
            seen[v] = true;
        }
    }
    for (const auto& c : q.clauses) {
        for (const QbfLit& l : c) {
            if (l.var < 1 || l.var > q.var_count())
                throw Error("variable " + std::to_string(l.var) +
                            " out of range");
            if (!seen[l.var])
                throw Error("variable " + std::to_string(l.var) +
                            " is not quantified");
        }
    }
}

int fresh_var(Qbf3& q, const std::string& name) {
    q.names.push_back(name);
    return q.var_count();
}

} // namespace

Qbf3 parse_qdimacs_eae(const std::string& text) {
    // strip comment lines, then tokenize
    std::string stripped;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == 'c') continue;
        stripped += line;
        stripped += '\n';
    }
    std::istringstream in(stripped);
    std::string tok;
    auto next = [&](const char* what) {
        if (!(in >> tok)) throw Error(std::string("unexpected end of input, expected ") + what);
        return tok;
    };
    auto next_int = [&](const char* what) {
        next(what);
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw Error("expected " + std::string(what) + ", got '" + tok + "'");
        }
    };

    if (next("'p'") != "p" || next("'cnf'") != "cnf")
        throw Error("missing 'p cnf' header");
    int nvars = next_int("variable count");
    int nclauses = next_int("clause count");
    if (nvars < 0 || nclauses < 0) throw Error("negative size in header");

    Qbf3 q;
    q.names.resize(nvars + 1);
    for (int v = 1; v <= nvars; ++v) q.names[v] = "p" + std::to_string(v);

    // quantifier blocks; consecutive blocks of one kind merge
    std::vector<std::pair<char, std::vector<int>>> blocks;
    std::string first = nclauses > 0 || nvars > 0 ? next("clauses or quantifier block") : "";
    while (first == "e" || first == "a") {
        std::vector<int> vars;
        for (;;) {
            int v = next_int("variable or terminating 0");
            if (v == 0) break;
            if (v < 0) throw Error("negative variable in quantifier block");
            vars.push_back(v);
        }
        if (!blocks.empty() && blocks.back().first == first[0]) {
            auto& dst = blocks.back().second;
            dst.insert(dst.end(), vars.begin(), vars.end());
        } else {
            blocks.emplace_back(first[0], std::move(vars));
        }
        first = nclauses > 0 ? next("clause") : "";
        if (first.empty()) break;
    }
    int slot = 0; // 0 -> x, 1 -> y, 2 -> z
    for (auto& [kind, vars] : blocks) {
        if (kind == 'a') {
            if (slot > 1) throw Error("quantifier prefix does not fit the "
                                      "exists-forall-exists pattern");
            slot = 1;
            q.y.insert(q.y.end(), vars.begin(), vars.end());
            ++slot;
        } else {
            if (slot == 0) {
                q.x.insert(q.x.end(), vars.begin(), vars.end());
                slot = 1;
            } else if (slot == 2) {
                q.z.insert(q.z.end(), vars.begin(), vars.end());
                slot = 3;
            } else {
                throw Error("quantifier prefix does not fit the "
                            "exists-forall-exists pattern");
            }
        }
    }

    // clauses; `first` already holds the first literal token if any
    for (int c = 0; c < nclauses; ++c) {
        std::vector<QbfLit> clause;
        for (;;) {
            int lit;
            if (!first.empty()) {
                try {
                    size_t used = 0;
                    lit = std::stoi(first, &used);
                    if (used != first.size()) throw std::invalid_argument(first);
                } catch (const std::exception&) {
                    throw Error("expected literal, got '" + first + "'");
                }
                first.clear();
            } else {
                lit = next_int("literal or terminating 0");
            }
            if (lit == 0) break;
            clause.push_back({std::abs(lit), lit < 0});
        }
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        if (clause.empty()) throw Error("empty clause");
        q.clauses.push_back(std::move(clause));
    }
    if (in >> tok) throw Error("trailing input after last clause: '" + tok + "'");

    // unquantified variables become outermost existentials
    std::vector<bool> quantified(nvars + 1, false);
    for (const auto* block : {&q.x, &q.y, &q.z}) {
        for (int v : *block) {
            if (v >= 1 && v <= nvars) quantified[v] = true;
        }
    }
    std::vector<int> free;
    for (const auto& c : q.clauses) {
        for (const QbfLit& l : c) {
            if (l.var >= 1 && l.var <= nvars && !quantified[l.var]) {
                free.push_back(l.var);
                quantified[l.var] = true;
            }
        }
    }
    free = sorted_unique(std::move(free));
    q.x.insert(q.x.end(), free.begin(), free.end());

    check_blocks(q);
    return q;
}

std::string render_qdimacs(const Qbf3& q) {
    std::string out = "p cnf " + std::to_string(q.var_count()) + " " +
                      std::to_string(q.clauses.size()) + "\n";
    auto block = [&](char kind, const std::vector<int>& vars) {
        if (vars.empty()) return;
        out += kind;
        for (int v : vars) out += " " + std::to_string(v);
        out += " 0\n";
    };
    block('e', q.x);
    block('a', q.y);
    block('e', q.z);
    for (const auto& c : q.clauses) {
        for (const QbfLit& l : c) {
            out += std::to_string(l.neg ? -l.var : l.var) + " ";
        }
        out += "0\n";
    }
    return out;
}

Qbf3 split_blocks_random(const Qbf3& q, unsigned seed) {
    check_blocks(q);
    Qbf3 out = q;
    out.x.clear();
    out.y.clear();
    out.z.clear();
    std::mt19937 gen(seed);
    for (int v = 1; v <= q.var_count(); ++v) {
        switch (gen() % 3) {
        case 0: out.x.push_back(v); break;
        case 1: out.y.push_back(v); break;
        default: out.z.push_back(v); break;
        }
    }
    return out;
}

Qbf3 normalize_3cnf(const Qbf3& q) {
    check_blocks(q);
    Qbf3 out = q;
    out.clauses.clear();
    int chain = 0;
    for (const auto& c : q.clauses) {
        if (c.size() <= 3) {
            out.clauses.push_back(c);
            continue;
        }
        QbfLit carry{};
        size_t idx = 0;
        for (bool first = true;; first = false) {
            std::vector<QbfLit> piece;
            if (!first) piece.push_back({carry.var, true});
            size_t room = 3 - piece.size();
            if (c.size() - idx <= room) {
                while (idx < c.size()) piece.push_back(c[idx++]);
                out.clauses.push_back(std::move(piece));
                break;
            }
            for (size_t t = 0; t + 1 < room; ++t) piece.push_back(c[idx++]);
            int s = fresh_var(out, "s" + std::to_string(++chain));
            out.z.push_back(s);
            carry = {s, false};
            piece.push_back(carry);
            out.clauses.push_back(std::move(piece));
        }
    }
    return out;
}

Qbf3 extend(const Qbf3& q) {
    check_blocks(q);
    Qbf3 out = q;
    for (size_t j = 0; j < out.clauses.size(); ++j) {
        int w = fresh_var(out, "w" + std::to_string(j + 1));
        out.y.push_back(w);
        out.clauses[j].push_back({w, false});
    }
    return out;
}

bool is_restricted(const Qbf3& q) {
    check_blocks(q);
    std::vector<bool> universal(q.names.size(), false);
    for (int v : q.y) universal[v] = true;
    std::vector<std::vector<QbfLit>> remaining;
    for (const auto& c : q.clauses) {
        std::vector<QbfLit> r;
        bool satisfied = false;
        for (const QbfLit& l : c) {
            if (universal[l.var]) {
                if (!l.neg) {
                    satisfied = true;
                    break;
                }
            } else {
                r.push_back(l);
            }
        }
        if (satisfied) continue;
        if (r.empty()) return false;
        remaining.push_back(std::move(r));
    }
    if (remaining.empty()) return true;
    std::vector<int> vars;
    for (const auto& c : remaining) {
        for (const QbfLit& l : c) vars.push_back(l.var);
    }
    vars = sorted_unique(std::move(vars));
    if (vars.size() > 20)
        throw Error("too many variables for the exhaustive tautology check");
    std::vector<int> pos(q.names.size(), -1);
    for (size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = static_cast<int>(i);
    for (uint32_t m = 0; m < (1u << vars.size()); ++m) {
        for (const auto& c : remaining) {
            bool sat = false;
            for (const QbfLit& l : c) {
                bool val = (m >> pos[l.var]) & 1u;
                if (val != l.neg) {
                    sat = true;
                    break;
                }
            }
            if (!sat) return false;
        }
    }
    return true;
}

ElpProgram qbf_to_elp(const Qbf3& q, bool check) {
    check_blocks(q);
    if (check && !is_restricted(q))
        throw Error("formula is not restricted: substituting true for the "
                    "universals must satisfy every clause");

    ElpProgram p;
    auto add_fresh = [&](const std::string& name) {
        if (p.atoms.find(name) != 0)
            throw Error("duplicate atom name in formula: " + name);
        return p.atoms.add(name);
    };
    std::vector<AtomIdx> plain(q.names.size(), 0), bar(q.names.size(), 0);
    for (const auto* block : {&q.x, &q.y, &q.z}) {
        for (int v : *block) {
            plain[v] = add_fresh(q.names[v]);
            bar[v] = add_fresh(q.names[v] + "_bar");
        }
    }
    auto aux = [&](std::string name) {
        while (p.atoms.find(name) != 0) name += "0";
        return p.atoms.add(name);
    };
    AtomIdx u = aux("u");
    AtomIdx vt = aux("vt");
    AtomIdx v = aux("v");

    // outer existentials: value subject to the epistemic guess
    for (int xv : q.x) {
        p.rules.push_back({{plain[xv]}, {BodyElement::elit({bar[xv], false})}});
        p.rules.push_back({{bar[xv]}, {BodyElement::elit({plain[xv], false})}});
    }
    // universals: value left open between answer sets
    for (int yv : q.y) {
        p.rules.push_back({{plain[yv]}, {BodyElement::literal({bar[yv], true})}});
        p.rules.push_back({{bar[yv]}, {BodyElement::literal({plain[yv], true})}});
    }
    // inner existentials: plain disjunctive choice
    for (int zv : q.z) {
        p.rules.push_back({{plain[zv], bar[zv]}, {}});
    }
    // u marks a falsified clause
    for (const auto& c : q.clauses) {
        ElpRule r;
        r.head = {u};
        std::vector<AtomIdx> body;
        for (const QbfLit& l : c) body.push_back(l.neg ? plain[l.var] : bar[l.var]);
        for (AtomIdx a : sorted_unique(std::move(body)))
            r.body.push_back(BodyElement::literal({a, false}));
        p.rules.push_back(std::move(r));
    }
    // saturate the inner existentials once a clause failed
    for (int zv : q.z) {
        p.rules.push_back({{plain[zv]}, {BodyElement::literal({u, false})}});
        p.rules.push_back({{bar[zv]}, {BodyElement::literal({u, false})}});
    }
    // v must stay unknown and u known-false for the guess to survive
    p.rules.push_back({{v},
                       {BodyElement::elit({vt, false}),
                        BodyElement::elit({u, true})}});
    p.rules.push_back({{vt}, {BodyElement::literal({v, false})}});
    p.rules.push_back({{v}, {BodyElement::literal({vt, false})}});
    return p;
}

bool qbf_validity_bruteforce(const Qbf3& q) {
    check_blocks(q);
    size_t total = q.x.size() + q.y.size() + q.z.size();
    if (total > 20) throw Error("too many variables for exhaustive evaluation");
    std::vector<int> pos(q.names.size(), -1);
    int next = 0;
    for (const auto* block : {&q.x, &q.y, &q.z}) {
        for (int v : *block) pos[v] = next++;
    }
    struct MaskClause {
        uint32_t pos = 0, neg = 0;
    };
    std::vector<MaskClause> clauses;
    for (const auto& c : q.clauses) {
        MaskClause mc;
        for (const QbfLit& l : c) {
            (l.neg ? mc.neg : mc.pos) |= 1u << pos[l.var];
        }
        clauses.push_back(mc);
    }
    auto matrix = [&](uint32_t a) {
        for (const MaskClause& c : clauses) {
            if ((c.pos & a) == 0 && (c.neg & ~a) == 0) return false;
        }
        return true;
    };
    uint32_t nx = static_cast<uint32_t>(q.x.size());
    uint32_t ny = static_cast<uint32_t>(q.y.size());
    uint32_t nz = static_cast<uint32_t>(q.z.size());
    for (uint32_t xm = 0; xm < (1u << nx); ++xm) {
        bool all_y = true;
        for (uint32_t ym = 0; ym < (1u << ny) && all_y; ++ym) {
            bool some_z = false;
            for (uint32_t zm = 0; zm < (1u << nz); ++zm) {
                if (matrix(xm | (ym << nx) | (zm << (nx + ny)))) {
                    some_z = true;
                    break;
                }
            }
            all_y = some_z;
        }
        if (all_y) return true;
    }
    return false;
}

} // namespace selp
