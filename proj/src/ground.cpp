#include "selp/ground.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <unordered_set>

namespace selp {

int GroundProgram::intern(const std::string& name) {
    auto it = atom_ids.find(name);
    if (it != atom_ids.end()) return it->second;
    int id = atom_count();
    atom_names.push_back(name);
    atom_ids.emplace(name, id);
    return id;
}

int GroundProgram::find(const std::string& name) const {
    auto it = atom_ids.find(name);
    return it == atom_ids.end() ? -1 : it->second;
}

std::string GroundProgram::render() const {
    std::string out;
    for (const GroundRule& r : rules) {
        for (size_t i = 0; i < r.head.size(); ++i) {
            if (i) out += " | ";
            out += atom_names[r.head[i]];
        }
        if (!r.pos.empty() || !r.neg.empty()) {
            out += ":-";
            bool first = true;
            for (int a : r.pos) {
                out += first ? " " : ", ";
                out += atom_names[a];
                first = false;
            }
            for (int a : r.neg) {
                out += first ? " not " : ", not ";
                out += atom_names[a];
                first = false;
            }
        }
        out += ".\n";
    }
    return out;
}

namespace {

using Subst = std::unordered_map<std::string, std::string>;

bool parse_long(const std::string& s, long& out) {
    if (s.empty()) return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

long eval_int(const Term& t, const Subst& s);

std::string eval_term(const Term& t, const Subst& s) {
    switch (t.kind) {
    case Term::Kind::Int:
        return std::to_string(t.value);
    case Term::Kind::Sym:
        return t.name;
    case Term::Kind::Var: {
        auto it = s.find(t.name);
        if (it == s.end())
            throw Error("unbound variable " + t.name + " while grounding");
        return it->second;
    }
    case Term::Kind::Fun: {
        std::string out = t.name + "(";
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ",";
            out += eval_term(t.args[i], s);
        }
        return out + ")";
    }
    case Term::Kind::Sub:
        return std::to_string(eval_int(t.args[0], s) - eval_int(t.args[1], s));
    }
    throw Error("unknown term kind");
}

long eval_int(const Term& t, const Subst& s) {
    long v = 0;
    std::string str = eval_term(t, s);
    if (!parse_long(str, v))
        throw Error("arithmetic over non-integer term " + str);
    return v;
}

// Counts variables of t that are unbound under s; recurses into functions
// and arithmetic alike.
int unbound_vars(const Term& t, const Subst& s) {
    switch (t.kind) {
    case Term::Kind::Var:
        return s.contains(t.name) ? 0 : 1;
    case Term::Kind::Fun:
    case Term::Kind::Sub: {
        int c = 0;
        for (const Term& a : t.args) c += unbound_vars(a, s);
        return c;
    }
    default:
        return 0;
    }
}

constexpr int kStuckPenalty = 1000;

// Cost of selecting this atom next in the join: number of variables it would
// bind, with a large penalty when an arithmetic term could not be evaluated
// or inverted yet.
int selection_cost(const NonGroundAtom& a, const Subst& s) {
    int cost = 0;
    for (const Term& t : a.terms) {
        if (t.kind == Term::Kind::Sub) {
            int l = unbound_vars(t.args[0], s);
            int r = unbound_vars(t.args[1], s);
            bool invertible =
                (l == 0 && r == 0) ||
                (l == 0 && r == 1 && t.args[1].kind == Term::Kind::Var) ||
                (r == 0 && l == 1 && t.args[0].kind == Term::Kind::Var);
            cost += invertible ? l + r : kStuckPenalty;
        } else {
            cost += unbound_vars(t, s);
        }
    }
    return cost;
}

struct MatchCtx {
    Subst subst;
    std::vector<std::string> trail;

    bool bind(const std::string& var, const std::string& val) {
        auto it = subst.find(var);
        if (it != subst.end()) return it->second == val;
        subst.emplace(var, val);
        trail.push_back(var);
        return true;
    }
    size_t mark() const { return trail.size(); }
    void undo(size_t m) {
        while (trail.size() > m) {
            subst.erase(trail.back());
            trail.pop_back();
        }
    }
};

// Splits "f(a,g(b),1)" into name "f" and top-level arguments.
bool parse_fun_value(const std::string& val, std::string& name,
                     std::vector<std::string>& args) {
    size_t open = val.find('(');
    if (open == std::string::npos || val.back() != ')') return false;
    name = val.substr(0, open);
    int depth = 0;
    std::string cur;
    for (size_t i = open + 1; i + 1 < val.size(); ++i) {
        char c = val[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    args.push_back(cur);
    return true;
}

bool match_term(const Term& t, const std::string& val, MatchCtx& ctx) {
    switch (t.kind) {
    case Term::Kind::Int:
        return val == std::to_string(t.value);
    case Term::Kind::Sym:
        return val == t.name;
    case Term::Kind::Var:
        return ctx.bind(t.name, val);
    case Term::Kind::Fun: {
        std::string name;
        std::vector<std::string> args;
        if (!parse_fun_value(val, name, args)) return false;
        if (name != t.name || args.size() != t.args.size()) return false;
        for (size_t i = 0; i < args.size(); ++i) {
            if (!match_term(t.args[i], args[i], ctx)) return false;
        }
        return true;
    }
    case Term::Kind::Sub: {
        long v = 0;
        if (!parse_long(val, v)) return false;
        int l = unbound_vars(t.args[0], ctx.subst);
        int r = unbound_vars(t.args[1], ctx.subst);
        if (l == 0 && r == 0)
            return eval_int(t.args[0], ctx.subst) - eval_int(t.args[1], ctx.subst) == v;
        if (l == 0 && r == 1 && t.args[1].kind == Term::Kind::Var)
            return ctx.bind(t.args[1].name,
                            std::to_string(eval_int(t.args[0], ctx.subst) - v));
        if (r == 0 && l == 1 && t.args[0].kind == Term::Kind::Var)
            return ctx.bind(t.args[0].name,
                            std::to_string(v + eval_int(t.args[1], ctx.subst)));
        throw Error("cannot match arithmetic term with unbound variables");
    }
    }
    return false;
}

std::string tuple_key(const std::vector<std::string>& args) {
    std::string k;
    for (const std::string& a : args) {
        k += a;
        k += '\x1f';
    }
    return k;
}

std::string pred_key(const std::string& pred, size_t arity) {
    return pred + "/" + std::to_string(arity);
}

struct Tuples {
    std::vector<std::vector<std::string>> rows;
    std::unordered_set<std::string> keys;
};

using Index = std::unordered_map<std::string, Tuples>;

bool match_atom(const NonGroundAtom& pat, const std::vector<std::string>& row,
                MatchCtx& ctx) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (!match_term(pat.terms[i], row[i], ctx)) return false;
    }
    return true;
}

void join_rec(const std::vector<NonGroundAtom>& body, std::vector<bool>& used,
              int remaining, MatchCtx& ctx, const Index& idx,
              const std::function<void()>& emit) {
    if (remaining == 0) {
        emit();
        return;
    }
    int best = -1;
    int best_cost = std::numeric_limits<int>::max();
    for (size_t i = 0; i < body.size(); ++i) {
        if (used[i]) continue;
        int c = selection_cost(body[i], ctx.subst);
        if (c < best_cost) {
            best_cost = c;
            best = static_cast<int>(i);
        }
    }
    if (best_cost >= kStuckPenalty)
        throw Error("cannot order rule body for grounding: arithmetic term "
                    "stays unbound");
    const NonGroundAtom& atom = body[best];
    auto it = idx.find(pred_key(atom.pred, atom.terms.size()));
    if (it == idx.end()) return;
    used[best] = true;
    for (const auto& row : it->second.rows) {
        size_t m = ctx.mark();
        if (match_atom(atom, row, ctx))
            join_rec(body, used, remaining - 1, ctx, idx, emit);
        ctx.undo(m);
    }
    used[best] = false;
}

std::string atom_string(const std::string& pred,
                        const std::vector<std::string>& args) {
    if (args.empty()) return pred;
    std::string out = pred + "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i];
    }
    return out + ")";
}

std::vector<std::string> eval_args(const NonGroundAtom& a, const Subst& s) {
    std::vector<std::string> args;
    args.reserve(a.terms.size());
    for (const Term& t : a.terms) args.push_back(eval_term(t, s));
    return args;
}

} // namespace

GroundProgram ground(const NonGroundProgram& p, const Budget& budget) {
    for (const NonGroundRule& r : p.rules) {
        if (!is_safe(r)) throw Error("unsafe rule: " + render(r));
    }

    Index derivable;
    long derivable_count = 0;
    auto add_derivable = [&](const std::string& pred,
                             std::vector<std::string> args) {
        Tuples& t = derivable[pred_key(pred, args.size())];
        if (!t.keys.insert(tuple_key(args)).second) return false;
        t.rows.push_back(std::move(args));
        if (++derivable_count > budget.max_atoms)
            throw BudgetError("ground atom budget exceeded (" +
                              std::to_string(budget.max_atoms) + ")");
        return true;
    };
    auto is_derivable = [&](const std::string& pred,
                            const std::vector<std::string>& args) {
        auto it = derivable.find(pred_key(pred, args.size()));
        return it != derivable.end() && it->second.keys.contains(tuple_key(args));
    };

    // Relevance fixpoint: which ground atoms could possibly be derived,
    // ignoring negative bodies.  Constraints derive nothing and are skipped.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const NonGroundRule& r : p.rules) {
            if (r.head.empty()) continue;
            std::vector<std::pair<std::string, std::vector<std::string>>> pending;
            MatchCtx ctx;
            std::vector<bool> used(r.pos.size(), false);
            join_rec(r.pos, used, static_cast<int>(r.pos.size()), ctx, derivable,
                     [&] {
                         for (const NonGroundAtom& h : r.head)
                             pending.emplace_back(h.pred, eval_args(h, ctx.subst));
                     });
            for (auto& [pred, args] : pending) {
                if (add_derivable(pred, std::move(args))) changed = true;
            }
        }
    }

    GroundProgram g;
    g.show = p.show;
    std::unordered_set<std::string> rule_keys;
    long rule_count = 0;
    for (const NonGroundRule& r : p.rules) {
        MatchCtx ctx;
        std::vector<bool> used(r.pos.size(), false);
        join_rec(r.pos, used, static_cast<int>(r.pos.size()), ctx, derivable, [&] {
            GroundRule gr;
            for (const NonGroundAtom& h : r.head) {
                gr.head.push_back(g.intern(atom_string(h.pred, eval_args(h, ctx.subst))));
            }
            for (const NonGroundAtom& b : r.pos) {
                gr.pos.push_back(g.intern(atom_string(b.pred, eval_args(b, ctx.subst))));
            }
            for (const NonGroundAtom& b : r.neg) {
                auto args = eval_args(b, ctx.subst);
                // a negated atom that can never be derived is simply true
                if (!is_derivable(b.pred, args)) continue;
                gr.neg.push_back(g.intern(atom_string(b.pred, args)));
            }
            auto canon = [](std::vector<int>& v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
            };
            canon(gr.head);
            canon(gr.pos);
            canon(gr.neg);
            std::string key;
            for (int a : gr.head) key += std::to_string(a) + ",";
            key += "|";
            for (int a : gr.pos) key += std::to_string(a) + ",";
            key += "|";
            for (int a : gr.neg) key += std::to_string(a) + ",";
            if (!rule_keys.insert(key).second) return;
            if (++rule_count > budget.max_rules)
                throw BudgetError("ground rule budget exceeded (" +
                                  std::to_string(budget.max_rules) + ")");
            g.rules.push_back(std::move(gr));
        });
    }
    return g;
}

} // namespace selp
