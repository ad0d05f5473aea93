#include "selp/decompose.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "selp/graphs.hpp"

namespace selp {

namespace {

void collect_plain_vars(const Term& t, std::vector<std::string>& out) {
    switch (t.kind) {
    case Term::Kind::Var:
        out.push_back(t.name);
        break;
    case Term::Kind::Fun:
        for (const Term& a : t.args) collect_plain_vars(a, out);
        break;
    default:
        break; // arithmetic arguments do not bind
    }
}

std::vector<int> var_ids(const NonGroundAtom& a,
                         const std::vector<std::string>& names) {
    std::vector<std::string> vars;
    collect_vars(a, vars);
    std::vector<int> ids;
    for (const std::string& v : vars) {
        auto it = std::find(names.begin(), names.end(), v);
        ids.push_back(static_cast<int>(it - names.begin()));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace

std::vector<NonGroundRule> decompose_rule(const NonGroundRule& r, int rule_idx) {
    if (!is_plainly_safe(r))
        throw Error("cannot decompose rule, a variable has no binding "
                    "occurrence: " + render(r));
    RuleGraph rg = rule_graph(r);
    UGraph g = rg.graph;

    // all head variables must end up in one bag
    std::vector<int> head_ids;
    for (const NonGroundAtom& a : r.head) {
        for (int v : var_ids(a, rg.var_names)) head_ids.push_back(v);
    }
    std::sort(head_ids.begin(), head_ids.end());
    head_ids.erase(std::unique(head_ids.begin(), head_ids.end()), head_ids.end());
    for (size_t i = 0; i < head_ids.size(); ++i) {
        for (size_t j = i + 1; j < head_ids.size(); ++j) {
            g.add_edge(head_ids[i], head_ids[j]);
        }
    }

    TreeDecomposition td = td_minfill(g, 0);
    int nodes = td.node_count();
    if (nodes <= 1) return {r};

    // re-root at a bag that covers the head variables
    int root = td.root;
    if (!head_ids.empty()) {
        for (int t = 0; t < nodes; ++t) {
            bool covers = true;
            for (int v : head_ids) {
                if (!std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                root = t;
                break;
            }
        }
    }
    std::vector<std::vector<int>> adj(nodes);
    for (int t = 0; t < nodes; ++t) {
        if (td.parent[t] >= 0) {
            adj[t].push_back(td.parent[t]);
            adj[td.parent[t]].push_back(t);
        }
    }
    std::vector<int> parent(nodes, -1), depth(nodes, -1), order;
    std::queue<int> bfs;
    bfs.push(root);
    depth[root] = 0;
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        order.push_back(t);
        std::sort(adj[t].begin(), adj[t].end());
        for (int u : adj[t]) {
            if (depth[u] < 0 && u != root) {
                depth[u] = depth[t] + 1;
                parent[u] = t;
                bfs.push(u);
            }
        }
    }

    // place each body atom at the shallowest bag covering its variables
    struct Placed {
        const NonGroundAtom* atom;
        bool negated;
    };
    std::vector<std::vector<Placed>> placed(nodes);
    auto place = [&](const NonGroundAtom& a, bool negated) {
        auto ids = var_ids(a, rg.var_names);
        int best = -1;
        for (int t : order) {
            bool covers = true;
            for (int v : ids) {
                if (!std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
                    covers = false;
                    break;
                }
            }
            if (covers && (best < 0 || depth[t] < depth[best])) best = t;
        }
        placed[best].push_back({&a, negated});
    };
    for (const NonGroundAtom& a : r.pos) place(a, false);
    for (const NonGroundAtom& a : r.neg) place(a, true);

    // drop leaves that carry nothing
    std::vector<std::vector<int>> kids(nodes);
    for (int t = 0; t < nodes; ++t) {
        if (parent[t] >= 0) kids[parent[t]].push_back(t);
    }
    std::vector<bool> alive(nodes, true);
    bool pruned = true;
    while (pruned) {
        pruned = false;
        for (int t = 0; t < nodes; ++t) {
            if (!alive[t] || t == root || !placed[t].empty()) continue;
            bool leaf = true;
            for (int c : kids[t]) {
                if (alive[c]) {
                    leaf = false;
                    break;
                }
            }
            if (leaf) {
                alive[t] = false;
                pruned = true;
            }
        }
    }

    const std::string prefix = "tmp_" + std::to_string(rule_idx) + "_";
    auto interface_atom = [&](int t) {
        std::vector<int> shared;
        for (int v : td.bags[t]) {
            if (std::binary_search(td.bags[parent[t]].begin(),
                                   td.bags[parent[t]].end(), v)) {
                shared.push_back(v);
            }
        }
        NonGroundAtom a{prefix + std::to_string(t), {}};
        for (int v : shared) a.terms.push_back(Term::var(rg.var_names[v]));
        return a;
    };

    // emit children before parents
    std::vector<NonGroundRule> pieces;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        if (!alive[t]) continue;
        NonGroundRule piece;
        if (t == root) {
            piece.head = r.head;
        } else {
            piece.head = {interface_atom(t)};
        }
        for (const Placed& pl : placed[t]) {
            (pl.negated ? piece.neg : piece.pos).push_back(*pl.atom);
        }
        for (int c : kids[t]) {
            if (alive[c]) piece.pos.push_back(interface_atom(c));
        }
        pieces.push_back(std::move(piece));
    }

    // repair safety with domain predicates fed from the original body
    std::vector<NonGroundRule> helpers;
    std::map<std::string, NonGroundAtom> domain_atom;
    int helper_count = 0;
    for (NonGroundRule& piece : pieces) {
        std::vector<std::string> bound;
        for (const NonGroundAtom& a : piece.pos) {
            for (const Term& t : a.terms) collect_plain_vars(t, bound);
        }
        std::vector<std::string> extra;
        for (const std::string& v : vars_of(piece)) {
            if (std::find(bound.begin(), bound.end(), v) == bound.end())
                extra.push_back(v);
        }
        for (const std::string& v : extra) {
            auto it = domain_atom.find(v);
            if (it == domain_atom.end()) {
                const NonGroundAtom* source = nullptr;
                for (const NonGroundAtom& a : r.pos) {
                    std::vector<std::string> plain;
                    for (const Term& t : a.terms) collect_plain_vars(t, plain);
                    if (std::find(plain.begin(), plain.end(), v) != plain.end()) {
                        source = &a;
                        break;
                    }
                }
                NonGroundAtom da{prefix + "d" + std::to_string(++helper_count),
                                 {Term::var(v)}};
                helpers.push_back({{da}, {*source}, {}});
                it = domain_atom.emplace(v, std::move(da)).first;
            }
            piece.pos.push_back(it->second);
        }
    }

    std::vector<NonGroundRule> out = std::move(helpers);
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
    return out;
}

NonGroundProgram decompose_program(const NonGroundProgram& p) {
    NonGroundProgram out;
    out.show = p.show;
    int idx = 0;
    for (const NonGroundRule& r : p.rules) {
        auto pieces = decompose_rule(r, ++idx);
        out.rules.insert(out.rules.end(), std::make_move_iterator(pieces.begin()),
                         std::make_move_iterator(pieces.end()));
    }
    return out;
}

} // namespace selp
