#include "selp/reduction.hpp"

#include <algorithm>
#include <string>

namespace selp {

namespace {

Term c0() { return Term::integer(0); }
Term c1() { return Term::integer(1); }

Term xvar(AtomIdx i) { return Term::var("X" + std::to_string(i)); }
Term yvar(AtomIdx i) { return Term::var("Y" + std::to_string(i)); }

Term one_minus(Term t) { return Term::sub(c1(), std::move(t)); }

NonGroundAtom or3(Term a, Term b, Term c) {
    return {"or", {std::move(a), std::move(b), std::move(c)}};
}

std::vector<AtomIdx> rule_atoms(const ElpRule& r) {
    std::vector<AtomIdx> atoms;
    for (AtomIdx h : r.head) atoms.push_back(h);
    for (const BodyElement& e : r.body) atoms.push_back(e.atom());
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

// Left fold of "or" atoms combining all items into target.
void flatten_or(const std::vector<Term>& items, const Term& target,
                const std::string& helper_prefix,
                std::vector<NonGroundAtom>& out) {
    if (items.size() == 1) {
        out.push_back(or3(items[0], c0(), target));
        return;
    }
    Term acc = items[0];
    for (size_t k = 1; k < items.size(); ++k) {
        Term res = k + 1 == items.size()
                       ? target
                       : Term::var(helper_prefix + "_" + std::to_string(k));
        out.push_back(or3(acc, items[k], res));
        acc = res;
    }
}

} // namespace

Term lit_const(const ElpProgram& p, const Literal& l) {
    Term name = Term::sym(p.atoms.name(l.atom));
    if (!l.negated) return name;
    return Term::fun("neg", {std::move(name)});
}

void b_sat(const ElpProgram& p, int rule_idx, const std::vector<Term>& xvals,
           const std::vector<Term>& yvals, const Term& result,
           std::vector<NonGroundAtom>& out) {
    const ElpRule& r = p.rules[rule_idx - 1];
    const std::string rp = "_r" + std::to_string(rule_idx) + "_";
    const int m = static_cast<int>(r.head.size() + r.body.size());
    if (m == 0) {
        out.push_back(or3(c0(), c0(), result));
        return;
    }
    auto xval = [&](AtomIdx a) { return xvals[a - 1]; };
    auto yval = [&](AtomIdx a) { return yvals[a - 1]; };
    int j = 0;
    auto chain_out = [&] {
        return j == m ? result : Term::var("R" + rp + std::to_string(j));
    };
    Term prev = c0();
    for (AtomIdx h : r.head) {
        ++j;
        Term res = chain_out();
        out.push_back(or3(prev, yval(h), res)); // head atom true in the candidate
        prev = res;
    }
    for (const BodyElement& e : r.body) {
        ++j;
        Term res = chain_out();
        AtomIdx a = e.atom();
        if (!e.epistemic) {
            if (!e.lit.negated) {
                out.push_back(or3(prev, one_minus(yval(a)), res));
            } else {
                out.push_back(or3(prev, xval(a), res));
            }
            prev = res;
            continue;
        }
        Term nj = Term::var("N" + rp + std::to_string(j));
        Term tj = Term::var("T" + rp + std::to_string(j));
        out.push_back({"g", {lit_const(p, e.lit), nj}});
        if (!e.outer_negated) {
            // guessed away it is simply true; otherwise it turns into a
            // (possibly doubled) default negation of the inner literal
            if (!e.lit.negated) {
                out.push_back(or3(nj, one_minus(xval(a)), tj));
            } else {
                out.push_back(or3(nj, yval(a), tj));
            }
            out.push_back(or3(prev, one_minus(tj), res));
        } else {
            // guessed away the element is false, satisfying the rule outright
            out.push_back(or3(prev, nj, tj));
            if (!e.lit.negated) {
                out.push_back(or3(tj, one_minus(yval(a)), res));
            } else {
                out.push_back(or3(tj, xval(a), res));
            }
        }
        prev = res;
    }
}

void b_ss_naive(int atom_count, std::vector<NonGroundAtom>& out) {
    if (atom_count == 0) throw Error("proper-subset test needs atoms");
    for (AtomIdx i = 1; i <= atom_count; ++i) {
        out.push_back({"leq", {yvar(i), xvar(i)}});
    }
    Term prev = c0();
    for (AtomIdx i = 1; i <= atom_count; ++i) {
        Term res = i == atom_count ? c1() : Term::var("N" + std::to_string(i));
        out.push_back(or3(prev, Term::sub(xvar(i), yvar(i)), res));
        prev = res;
    }
}

void b_ss_td(const TreeDecomposition& td, int atom_count,
             std::vector<NonGroundAtom>& out) {
    if (atom_count == 0) throw Error("proper-subset test needs atoms");
    for (AtomIdx i = 1; i <= atom_count; ++i) {
        out.push_back({"leq", {yvar(i), xvar(i)}});
    }
    auto children = td.children();
    std::vector<Term> node_term(td.node_count(), c0());
    for (int t = 0; t < td.node_count(); ++t) {
        const std::string np = "_t" + std::to_string(t);
        const bool is_root = t == td.root;
        const bool leaf = children[t].empty();
        Term prev = c0();
        const auto& bag = td.bags[t];
        for (size_t k = 0; k < bag.size(); ++k) {
            AtomIdx a = bag[k] + 1;
            bool last = k + 1 == bag.size();
            Term res = leaf && is_root && last
                           ? c1()
                           : Term::var("N" + np + "_" + std::to_string(k + 1));
            out.push_back(or3(prev, Term::sub(xvar(a), yvar(a)), res));
            prev = res;
        }
        Term chain_term = bag.empty() ? c0() : prev;
        if (leaf) {
            node_term[t] = chain_term;
        } else {
            std::vector<Term> items{chain_term};
            for (int c : children[t]) items.push_back(node_term[c]);
            Term target = is_root ? c1() : Term::var("N" + np);
            flatten_or(items, target, "H" + np, out);
            node_term[t] = target;
        }
    }
}

NonGroundProgram reduce(const ElpProgram& p, const ReductionOptions& opt) {
    const int n = p.atoms.size();
    if (n == 0) throw Error("cannot translate a program without atoms");
    const auto elits = elitof(p);
    const int ne = static_cast<int>(elits.size());
    const int nr = static_cast<int>(p.rules.size());

    NonGroundProgram out;
    auto rule = [&](std::vector<NonGroundAtom> head, std::vector<NonGroundAtom> pos,
                    std::vector<NonGroundAtom> neg = {}) {
        out.rules.push_back({std::move(head), std::move(pos), std::move(neg)});
    };

    std::vector<Term> xs, ys;
    for (AtomIdx i = 1; i <= n; ++i) {
        xs.push_back(xvar(i));
        ys.push_back(yvar(i));
    }

    TreeDecomposition td;
    if (opt.bss == BssMode::TdGuided) td = td_minfill(primal_graph(p), opt.td_seed);
    auto b_ss = [&](std::vector<NonGroundAtom>& body) {
        if (opt.bss == BssMode::TdGuided) {
            b_ss_td(td, n, body);
        } else {
            b_ss_naive(n, body);
        }
    };

    // domain facts
    for (AtomIdx i = 1; i <= n; ++i) {
        rule({{"atom", {Term::sym(p.atoms.name(i))}}}, {});
    }
    for (const Elit& e : elits) {
        rule({{"elit", {lit_const(p, e.inner)}}}, {});
    }
    for (auto [a, b] : {std::pair{0, 0}, {0, 1}, {1, 1}}) {
        rule({{"leq", {Term::integer(a), Term::integer(b)}}}, {});
    }
    for (auto [a, b] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        rule({or3(Term::integer(a), Term::integer(b), Term::integer(a | b))}, {});
    }

    // one truth value per epistemic literal
    Term lv = Term::var("L");
    rule({{"g", {lv, c1()}}, {"g", {lv, c0()}}}, {{"elit", {lv}}});

    auto val_atom = [&](const std::string& pred, AtomIdx i, Term v) {
        return NonGroundAtom{pred, {Term::sym(p.atoms.name(i)), std::move(v)}};
    };
    auto guess_head = [&](const std::string& pred) {
        Term av = Term::var("A");
        return std::vector<NonGroundAtom>{{pred, {av, c0()}}, {pred, {av, c1()}}};
    };
    // body prefix binding X<i> for the given atoms
    auto bind_vals = [&](const std::string& pred, const std::vector<AtomIdx>& atoms,
                         std::vector<NonGroundAtom>& body) {
        for (AtomIdx i : atoms) body.push_back(val_atom(pred, i, xvar(i)));
    };
    std::vector<AtomIdx> all_atoms;
    for (AtomIdx i = 1; i <= n; ++i) all_atoms.push_back(i);

    // the candidate must violate no rule at its own level
    auto violation_body = [&](const std::string& pred, int r) {
        std::vector<NonGroundAtom> body;
        bind_vals(pred, rule_atoms(p.rules[r - 1]), body);
        b_sat(p, r, xs, xs, c0(), body);
        return body;
    };
    // ... and admit no proper submodel at the two-level reading
    auto submodel_body = [&](const std::string& pred) {
        std::vector<NonGroundAtom> body;
        bind_vals(pred, all_atoms, body);
        b_ss(body);
        for (int r = 1; r <= nr; ++r) b_sat(p, r, xs, ys, c1(), body);
        return body;
    };

    // check 1: v_check1 holds an answer set of the guessed reduct
    rule(guess_head("v_check1"), {{"atom", {Term::var("A")}}});
    for (int r = 1; r <= nr; ++r) rule({}, violation_body("v_check1", r));
    rule({}, submodel_body("v_check1"));

    // check 2: for every guessed-true epistemic literal some answer set
    // falsifies its inner literal
    for (int k = 1; k <= ne; ++k) {
        const std::string pred = "v_e" + std::to_string(k);
        const Literal& inner = elits[k - 1].inner;
        NonGroundAtom guard{"g", {lit_const(p, inner), c1()}};
        auto head = guess_head(pred);
        rule(std::move(head), {{"atom", {Term::var("A")}}, guard});
        rule({val_atom(pred, inner.atom, inner.negated ? c1() : c0())}, {guard});
        for (int r = 1; r <= nr; ++r) rule({}, violation_body(pred, r));
        rule({}, submodel_body(pred));
    }

    // check 3: no answer set of the reduct falsifies a guessed-false
    // epistemic literal (saturation)
    NonGroundAtom sat{"sat", {}};
    rule(guess_head("v_check3"), {{"atom", {Term::var("A")}}});
    rule({{"v_check3", {Term::var("A"), c0()}}}, {sat, {"atom", {Term::var("A")}}});
    rule({{"v_check3", {Term::var("A"), c1()}}}, {sat, {"atom", {Term::var("A")}}});
    for (int r = 1; r <= nr; ++r) rule({sat}, violation_body("v_check3", r));
    rule({sat}, submodel_body("v_check3"));
    {
        std::vector<NonGroundAtom> body;
        for (int k = 1; k <= ne; ++k) {
            const Literal& inner = elits[k - 1].inner;
            Term nk = Term::var("N_e" + std::to_string(k));
            Term xk = Term::var("X_e" + std::to_string(k));
            body.push_back({"g", {lit_const(p, inner), nk}});
            body.push_back(val_atom("v_check3", inner.atom, xk));
            body.push_back(or3(nk, inner.negated ? one_minus(xk) : xk, c1()));
        }
        rule({sat}, std::move(body));
    }
    rule({}, {}, {sat});

    if (opt.emit_projection) out.show = {{"g", 2}, {"v_check1", 2}};
    return out;
}

} // namespace selp
