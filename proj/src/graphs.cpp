#include "selp/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace selp {

int UGraph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

void UGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw Error("edge endpoint out of range");
    if (u == v) return;
    if (!has_edge(u, v)) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool UGraph::has_edge(int u, int v) const {
    const auto& n = adj_[u];
    return std::find(n.begin(), n.end(), v) != n.end();
}

long UGraph::edge_count() const {
    long total = 0;
    for (const auto& n : adj_) total += static_cast<long>(n.size());
    return total / 2;
}

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> ch(node_count());
    for (int i = 0; i < node_count(); ++i) {
        if (parent[i] >= 0) ch[parent[i]].push_back(i);
    }
    return ch;
}

std::vector<int> TreeDecomposition::depths() const {
    std::vector<int> d(node_count(), -1);
    auto ch = children();
    std::vector<int> stack{root};
    if (root >= 0) d[root] = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int c : ch[t]) {
            d[c] = d[t] + 1;
            stack.push_back(c);
        }
    }
    return d;
}

UGraph primal_graph(const ElpProgram& p) {
    UGraph g(p.atoms.size());
    for (const ElpRule& r : p.rules) {
        std::vector<int> atoms;
        for (AtomIdx h : r.head) atoms.push_back(h - 1);
        for (const BodyElement& e : r.body) atoms.push_back(e.atom() - 1);
        for (size_t i = 0; i < atoms.size(); ++i) {
            for (size_t j = i + 1; j < atoms.size(); ++j) {
                g.add_edge(atoms[i], atoms[j]);
            }
        }
    }
    return g;
}

RuleGraph rule_graph(const NonGroundRule& r) {
    RuleGraph rg;
    auto vertex = [&](const std::string& v) {
        auto it = std::find(rg.var_names.begin(), rg.var_names.end(), v);
        if (it != rg.var_names.end())
            return static_cast<int>(it - rg.var_names.begin());
        rg.var_names.push_back(v);
        rg.graph.add_vertex();
        return rg.graph.vertex_count() - 1;
    };
    auto add_atom = [&](const NonGroundAtom& a) {
        std::vector<std::string> vars;
        collect_vars(a, vars);
        std::vector<int> ids;
        for (const std::string& v : vars) ids.push_back(vertex(v));
        for (size_t i = 0; i < ids.size(); ++i) {
            for (size_t j = i + 1; j < ids.size(); ++j) {
                rg.graph.add_edge(ids[i], ids[j]);
            }
        }
    };
    for (const NonGroundAtom& a : r.head) add_atom(a);
    for (const NonGroundAtom& a : r.pos) add_atom(a);
    for (const NonGroundAtom& a : r.neg) add_atom(a);
    return rg;
}

TreeDecomposition td_minfill(const UGraph& g, unsigned seed) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        td.parent.push_back(-1);
        td.root = 0;
        return td;
    }

    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::vector<std::vector<int>> bags;     // in elimination order
    std::vector<int> elim_pos(n, -1);       // vertex -> elimination step
    std::vector<std::vector<int>> elim_nbr; // neighbors at elimination time
    std::mt19937 rng(seed);

    auto fill_cost = [&](int v) {
        long fill = 0;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (!adj[nb[i]].contains(nb[j])) ++fill;
            }
        }
        return fill;
    };

    for (int step = 0; step < n; ++step) {
        long best = -1;
        std::vector<int> ties;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long c = fill_cost(v);
            if (best < 0 || c < best) {
                best = c;
                ties = {v};
            } else if (c == best) {
                ties.push_back(v);
            }
        }
        int pick = ties.front();
        if (seed != 0 && ties.size() > 1) {
            pick = ties[rng() % ties.size()];
        }
        std::vector<int> nb(adj[pick].begin(), adj[pick].end());
        std::vector<int> bag = nb;
        bag.push_back(pick);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
        elim_pos[pick] = step;
        elim_nbr.push_back(nb);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        for (int u : nb) adj[u].erase(pick);
        adj[pick].clear();
        gone[pick] = true;
    }

    // Standard construction: the bag of step k hangs under the bag of the
    // earliest-eliminated neighbor; bags without remaining neighbors hang
    // under the next bag so the result is one tree rooted at the last bag.
    td.bags = bags;
    td.parent.assign(n, -1);
    td.root = n - 1;
    for (int k = 0; k < n; ++k) {
        if (k == n - 1) continue;
        int up = k + 1;
        if (!elim_nbr[k].empty()) {
            int first = -1;
            for (int u : elim_nbr[k]) {
                if (first < 0 || elim_pos[u] < first) first = elim_pos[u];
            }
            up = first;
        }
        td.parent[k] = up;
    }
    return td;
}

std::vector<std::string> td_validate(const UGraph& g, const TreeDecomposition& td) {
    std::vector<std::string> problems;
    int n = g.vertex_count();
    int k = td.node_count();
    if (k == 0) {
        problems.push_back("decomposition has no nodes");
        return problems;
    }
    if (td.root < 0 || td.root >= k || static_cast<int>(td.parent.size()) != k ||
        td.parent[td.root] != -1) {
        problems.push_back("malformed root/parent structure");
        return problems;
    }
    // parent links must reach the root without cycles
    for (int t = 0; t < k; ++t) {
        int cur = t, hops = 0;
        while (cur != td.root) {
            cur = td.parent[cur];
            if (cur < 0 || cur >= k || ++hops > k) {
                problems.push_back("node " + std::to_string(t) +
                                   " is not connected to the root");
                return problems;
            }
        }
    }
    for (const auto& bag : td.bags) {
        for (int v : bag) {
            if (v < 0 || v >= n)
                problems.push_back("bag vertex out of range: " + std::to_string(v));
        }
    }

    auto in_bag = [&](int t, int v) {
        const auto& b = td.bags[t];
        return std::binary_search(b.begin(), b.end(), v);
    };
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (int t = 0; t < k && !found; ++t) found = in_bag(t, v);
        if (!found)
            problems.push_back("vertex " + std::to_string(v) + " is in no bag");
    }
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            bool found = false;
            for (int t = 0; t < k && !found; ++t)
                found = in_bag(t, u) && in_bag(t, v);
            if (!found)
                problems.push_back("edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") is covered by no bag");
        }
    }
    // occurrence sets must induce connected subtrees
    for (int v = 0; v < n; ++v) {
        std::vector<int> occ;
        for (int t = 0; t < k; ++t) {
            if (in_bag(t, v)) occ.push_back(t);
        }
        if (occ.size() <= 1) continue;
        // walk each occurrence toward the root; within the occurrence set the
        // walk must stay in the set until it hits the set's shallowest node
        std::vector<int> depth = td.depths();
        int top = occ.front();
        for (int t : occ) {
            if (depth[t] < depth[top]) top = t;
        }
        for (int t : occ) {
            int cur = t;
            while (cur != top) {
                cur = td.parent[cur];
                if (cur < 0 || !in_bag(cur, v)) {
                    problems.push_back("vertex " + std::to_string(v) +
                                       " occurs in a disconnected set of bags");
                    cur = top;
                }
            }
        }
    }
    return problems;
}

namespace {
std::string vertex_label(int v, const std::vector<std::string>& names) {
    if (v >= 0 && v < static_cast<int>(names.size())) return names[v];
    return "v" + std::to_string(v);
}
} // namespace

std::string to_dot(const UGraph& g, const std::vector<std::string>& names) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  \"" + vertex_label(v, names) + "\";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            out += "  \"" + vertex_label(u, names) + "\" -- \"" +
                   vertex_label(v, names) + "\";\n";
        }
    }
    return out + "}\n";
}

std::string to_dot(const TreeDecomposition& td,
                   const std::vector<std::string>& names) {
    std::string out = "graph td {\n";
    for (int t = 0; t < td.node_count(); ++t) {
        out += "  n" + std::to_string(t) + " [label=\"{";
        for (size_t i = 0; i < td.bags[t].size(); ++i) {
            if (i) out += ",";
            out += vertex_label(td.bags[t][i], names);
        }
        out += "}\"];\n";
    }
    for (int t = 0; t < td.node_count(); ++t) {
        if (td.parent[t] >= 0) {
            out += "  n" + std::to_string(td.parent[t]) + " -- n" +
                   std::to_string(t) + ";\n";
        }
    }
    return out + "}\n";
}

} // namespace selp
