#include "selp/asp.hpp"

#include <algorithm>

namespace selp {

void collect_vars(const Term& t, std::vector<std::string>& out) {
    switch (t.kind) {
    case Term::Kind::Var: out.push_back(t.name); break;
    case Term::Kind::Fun:
    case Term::Kind::Sub:
        for (const Term& a : t.args) collect_vars(a, out);
        break;
    default: break;
    }
}

void collect_vars(const NonGroundAtom& a, std::vector<std::string>& out) {
    for (const Term& t : a.terms) collect_vars(t, out);
}

namespace {

void push_unique(std::vector<std::string>& out, const std::vector<std::string>& in) {
    for (const std::string& v : in) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
}

// variables in plain (directly bindable) positions: not inside Sub
void collect_plain_vars(const Term& t, std::vector<std::string>& out) {
    switch (t.kind) {
    case Term::Kind::Var: out.push_back(t.name); break;
    case Term::Kind::Fun:
        for (const Term& a : t.args) collect_plain_vars(a, out);
        break;
    default: break;
    }
}

} // namespace

std::vector<std::string> vars_of(const NonGroundAtom& a) {
    std::vector<std::string> all;
    collect_vars(a, all);
    std::vector<std::string> out;
    push_unique(out, all);
    return out;
}

std::vector<std::string> vars_of(const NonGroundRule& r) {
    std::vector<std::string> all;
    for (const NonGroundAtom& a : r.head) collect_vars(a, all);
    for (const NonGroundAtom& a : r.pos) collect_vars(a, all);
    for (const NonGroundAtom& a : r.neg) collect_vars(a, all);
    std::vector<std::string> out;
    push_unique(out, all);
    return out;
}

bool is_safe(const NonGroundRule& r) {
    std::vector<std::string> bound;
    for (const NonGroundAtom& a : r.pos) collect_vars(a, bound);
    for (const std::string& v : vars_of(r)) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) return false;
    }
    return true;
}

bool is_plainly_safe(const NonGroundRule& r) {
    std::vector<std::string> bound;
    for (const NonGroundAtom& a : r.pos) {
        for (const Term& t : a.terms) collect_plain_vars(t, bound);
    }
    for (const std::string& v : vars_of(r)) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) return false;
    }
    return true;
}

std::string render(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Int: return std::to_string(t.value);
    case Term::Kind::Sym:
    case Term::Kind::Var: return t.name;
    case Term::Kind::Fun: {
        std::string out = t.name + "(";
        for (size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ',';
            out += render(t.args[i]);
        }
        return out + ")";
    }
    case Term::Kind::Sub: return render(t.args[0]) + "-" + render(t.args[1]);
    }
    return {};
}

std::string render(const NonGroundAtom& a) {
    if (a.terms.empty()) return a.pred;
    std::string out = a.pred + "(";
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (i) out += ',';
        out += render(a.terms[i]);
    }
    return out + ")";
}

std::string render(const NonGroundRule& r) {
    std::string out;
    for (size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += render(r.head[i]);
    }
    if (!r.pos.empty() || !r.neg.empty()) {
        if (!r.head.empty()) out += ' ';
        out += ":- ";
        bool first = true;
        for (const NonGroundAtom& a : r.pos) {
            if (!first) out += ", ";
            first = false;
            out += render(a);
        }
        for (const NonGroundAtom& a : r.neg) {
            if (!first) out += ", ";
            first = false;
            out += "not " + render(a);
        }
    } else if (r.head.empty()) {
        out += ":-";
    }
    return out + ".";
}

std::string render_asp(const NonGroundProgram& p) {
    std::string out;
    for (const NonGroundRule& r : p.rules) {
        out += render(r);
        out += '\n';
    }
    for (const auto& [name, arity] : p.show) {
        out += "#show " + name + "/" + std::to_string(arity) + ".\n";
    }
    return out;
}

long emitted_atom_count(const NonGroundProgram& p) {
    long n = 0;
    for (const NonGroundRule& r : p.rules) {
        n += static_cast<long>(r.head.size() + r.pos.size() + r.neg.size());
    }
    return n;
}

int max_predicate_arity(const NonGroundProgram& p) {
    int m = 0;
    for (const NonGroundRule& r : p.rules) {
        for (const NonGroundAtom& a : r.head) m = std::max(m, a.arity());
        for (const NonGroundAtom& a : r.pos) m = std::max(m, a.arity());
        for (const NonGroundAtom& a : r.neg) m = std::max(m, a.arity());
    }
    return m;
}

} // namespace selp
