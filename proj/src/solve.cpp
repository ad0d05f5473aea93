#include "selp/solve.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace selp {

namespace {

// Small DPLL solver with two watched literals per clause; literals are
// +v+1 / -(v+1).  Branching follows the given variable order (index order by
// default) and tries false first, so runs are deterministic.  Deciding
// choice-like variables first keeps derived atoms on unit propagation, which
// is what makes enumeration with blocking clauses tractable on rule-heavy
// programs.
class SatSolver {
public:
    explicit SatSolver(int vars)
        : assign_(vars, 0), watchers_(2 * static_cast<size_t>(vars)) {
        order_.resize(vars);
        for (int v = 0; v < vars; ++v) order_[v] = v;
    }

    void set_branch_order(std::vector<int> order) { order_ = std::move(order); }

    void add_clause(std::vector<int> lits) {
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (int l : lits) {
            if (std::binary_search(lits.begin(), lits.end(), -l)) return; // tautology
        }
        if (lits.empty()) {
            unsat_ = true;
            return;
        }
        if (lits.size() == 1) {
            units_.push_back(lits[0]);
            return;
        }
        int id = static_cast<int>(clauses_.size());
        watchers_[slot(lits[0])].push_back(id);
        watchers_[slot(lits[1])].push_back(id);
        clauses_.push_back(std::move(lits));
    }

    bool solve() {
        if (unsat_) return false;
        std::fill(assign_.begin(), assign_.end(), 0);
        trail_.clear();
        qhead_ = 0;
        for (int l : units_) {
            if (!enqueue(l) || !propagate()) return false;
        }
        return search();
    }

    bool value(int v) const { return assign_[v] > 0; }

private:
    static size_t slot(int l) {
        return 2 * static_cast<size_t>(std::abs(l) - 1) + (l < 0 ? 1 : 0);
    }

    bool lit_true(int l) const {
        int8_t a = assign_[std::abs(l) - 1];
        return l > 0 ? a > 0 : a < 0;
    }

    bool lit_false(int l) const {
        int8_t a = assign_[std::abs(l) - 1];
        return l > 0 ? a < 0 : a > 0;
    }

    bool enqueue(int l) {
        if (lit_false(l)) return false;
        if (lit_true(l)) return true;
        assign_[std::abs(l) - 1] = l > 0 ? 1 : -1;
        trail_.push_back(l);
        return true;
    }

    // Processes assignments past qhead_, moving watches off falsified
    // literals; false means conflict.
    bool propagate() {
        while (qhead_ < trail_.size()) {
            int falsified = -trail_[qhead_++];
            auto& ws = watchers_[slot(falsified)];
            size_t keep = 0;
            for (size_t i = 0; i < ws.size(); ++i) {
                int id = ws[i];
                auto& c = clauses_[id];
                if (c[0] == falsified) std::swap(c[0], c[1]);
                if (lit_true(c[0])) {
                    ws[keep++] = id;
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < c.size(); ++k) {
                    if (!lit_false(c[k])) {
                        std::swap(c[1], c[k]);
                        watchers_[slot(c[1])].push_back(id);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[keep++] = id; // stays watched; clause is unit or conflicting
                if (!enqueue(c[0])) {
                    for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
                    ws.resize(keep);
                    return false;
                }
            }
            ws.resize(keep);
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            assign_[std::abs(trail_.back()) - 1] = 0;
            trail_.pop_back();
        }
        qhead_ = mark;
    }

    bool search() {
        int v = -1;
        for (int cand : order_) {
            if (assign_[cand] == 0) {
                v = cand;
                break;
            }
        }
        if (v < 0) return true;
        for (int8_t val : {int8_t(-1), int8_t(1)}) {
            size_t mark = trail_.size();
            assign_[v] = val;
            trail_.push_back(val > 0 ? v + 1 : -(v + 1));
            if (propagate() && search()) return true;
            undo(mark);
        }
        return false;
    }

    std::vector<int8_t> assign_;
    std::vector<int> trail_; // assigned literals in order
    std::vector<int> order_;
    std::vector<int> units_;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watchers_; // slot(lit) -> clause ids
    bool unsat_ = false;
    size_t qhead_ = 0;
};

// Choice atoms (disjunctive heads, negated bodies) first, derived atoms last.
std::vector<int> branch_order(const GroundProgram& p) {
    int n = p.atom_count();
    std::vector<bool> choice(n, false);
    for (const GroundRule& r : p.rules) {
        if (r.head.size() > 1) {
            for (int a : r.head) choice[a] = true;
        }
        for (int a : r.neg) choice[a] = true;
    }
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (choice[v]) order.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        if (!choice[v]) order.push_back(v);
    }
    return order;
}

std::vector<std::vector<int>> program_clauses(const GroundProgram& p) {
    std::vector<std::vector<int>> clauses;
    clauses.reserve(p.rules.size());
    for (const GroundRule& r : p.rules) {
        std::vector<int> c;
        for (int a : r.head) c.push_back(a + 1);
        for (int a : r.pos) c.push_back(-(a + 1));
        for (int a : r.neg) c.push_back(a + 1);
        clauses.push_back(std::move(c));
    }
    return clauses;
}

// Shrinks a classical model to a subset-minimal one by repeatedly asking for
// a proper submodel.
std::vector<bool> minimize_model(int n, const std::vector<std::vector<int>>& clauses,
                                 const std::vector<int>& order, std::vector<bool> m) {
    for (;;) {
        SatSolver s(n);
        s.set_branch_order(order);
        for (const auto& c : clauses) s.add_clause(c);
        std::vector<int> smaller;
        for (int v = 0; v < n; ++v) {
            if (m[v]) {
                smaller.push_back(-(v + 1));
            } else {
                s.add_clause({-(v + 1)});
            }
        }
        s.add_clause(std::move(smaller));
        if (!s.solve()) return m;
        for (int v = 0; v < n; ++v) m[v] = s.value(v);
    }
}

// Is the minimal classical model M also a minimal model of the reduct of p
// with respect to M?  Every minimal model of the positive reduct is the Horn
// closure of some head selection over its disjunctive rules, so M is minimal
// iff every selection closes to M itself.  Only rules with several heads
// inside M branch; for typical translations that is a handful.
bool is_answer_set(const GroundProgram& p, const std::vector<bool>& m) {
    struct ReductRule {
        std::vector<int> heads_in_m;
        std::vector<int> pos;
    };
    std::vector<ReductRule> horn;
    std::vector<ReductRule> multi;
    for (const GroundRule& r : p.rules) {
        bool deleted = false;
        for (int a : r.neg) {
            if (m[a]) {
                deleted = true;
                break;
            }
        }
        for (int a : r.pos) {
            if (!m[a]) {
                deleted = true; // body cannot hold within subsets of M
                break;
            }
        }
        if (deleted) continue;
        ReductRule rr;
        for (int a : r.head) {
            if (m[a]) rr.heads_in_m.push_back(a);
        }
        rr.pos = r.pos;
        (rr.heads_in_m.size() > 1 ? multi : horn).push_back(std::move(rr));
    }
    long target = 0;
    for (size_t v = 0; v < m.size(); ++v) target += m[v];
    std::vector<int> chosen(multi.size(), 0);
    std::vector<bool> closure(m.size());
    for (;;) {
        std::fill(closure.begin(), closure.end(), false);
        long size = 0;
        for (bool changed = true; changed;) {
            changed = false;
            auto fire = [&](const ReductRule& r, int head) {
                if (head >= 0 && closure[head]) return;
                for (int a : r.pos) {
                    if (!closure[a]) return;
                }
                if (head < 0) return; // headless body holds: not a model
                closure[head] = true;
                ++size;
                changed = true;
            };
            for (const auto& r : horn) {
                fire(r, r.heads_in_m.empty() ? -1 : r.heads_in_m[0]);
            }
            for (size_t i = 0; i < multi.size(); ++i) {
                fire(multi[i], multi[i].heads_in_m[chosen[i]]);
            }
        }
        if (size != target) return false; // proper submodel of the reduct
        size_t i = 0;
        while (i < multi.size() &&
               chosen[i] + 1 == static_cast<int>(multi[i].heads_in_m.size())) {
            chosen[i++] = 0;
        }
        if (i == multi.size()) return true;
        ++chosen[i];
    }
}

} // namespace

std::vector<std::vector<int>> answer_sets(const GroundProgram& p, long limit) {
    int n = p.atom_count();
    auto clauses = program_clauses(p);
    auto order = branch_order(p);
    std::vector<std::vector<int>> blocking;
    std::vector<std::vector<int>> result;
    // Every answer set is a subset-minimal classical model, so enumerate
    // those (blocking all supersets of each one found) and keep the ones
    // that are also minimal for their reduct.
    while (limit < 0 || static_cast<long>(result.size()) < limit) {
        SatSolver s(n);
        s.set_branch_order(order);
        for (const auto& c : clauses) s.add_clause(c);
        for (const auto& c : blocking) s.add_clause(c);
        if (!s.solve()) break;
        std::vector<bool> m(n);
        for (int v = 0; v < n; ++v) m[v] = s.value(v);
        m = minimize_model(n, clauses, order, std::move(m));
        if (is_answer_set(p, m)) {
            std::vector<int> atoms;
            for (int v = 0; v < n; ++v) {
                if (m[v]) atoms.push_back(v);
            }
            result.push_back(std::move(atoms));
        }
        std::vector<int> block;
        for (int v = 0; v < n; ++v) {
            if (m[v]) block.push_back(-(v + 1));
        }
        if (block.empty()) break; // the empty model is the only minimal one
        blocking.push_back(std::move(block));
    }
    return result;
}

bool has_answer_set(const GroundProgram& p) { return !answer_sets(p, 1).empty(); }

std::vector<std::vector<std::string>> project_answer_sets(const GroundProgram& p,
                                                          long limit) {
    auto pred_arity = [](const std::string& name) {
        size_t open = name.find('(');
        if (open == std::string::npos) return std::make_pair(name, 0);
        int depth = 0, arity = 1;
        for (size_t i = open + 1; i + 1 < name.size(); ++i) {
            if (name[i] == '(') ++depth;
            if (name[i] == ')') --depth;
            if (name[i] == ',' && depth == 0) ++arity;
        }
        return std::make_pair(name.substr(0, open), arity);
    };
    std::vector<bool> shown(p.atom_count(), p.show.empty());
    if (!p.show.empty()) {
        for (int v = 0; v < p.atom_count(); ++v) {
            auto [pred, arity] = pred_arity(p.atom_names[v]);
            for (const auto& [sp, sa] : p.show) {
                if (sp == pred && sa == arity) {
                    shown[v] = true;
                    break;
                }
            }
        }
    }
    std::vector<std::vector<std::string>> result;
    std::set<std::vector<std::string>> seen;
    for (const auto& as : answer_sets(p, -1)) {
        std::vector<std::string> names;
        for (int v : as) {
            if (shown[v]) names.push_back(p.atom_names[v]);
        }
        std::sort(names.begin(), names.end());
        if (seen.insert(names).second) result.push_back(std::move(names));
        if (limit >= 0 && static_cast<long>(result.size()) >= limit) break;
    }
    return result;
}

} // namespace selp
