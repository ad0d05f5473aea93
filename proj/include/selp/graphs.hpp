#pragma once

#include <string>
#include <vector>

#include "selp/asp.hpp"
#include "selp/core.hpp"

namespace selp {

// Simple undirected graph over vertices 0..n-1, no loops, no multi-edges.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int add_vertex();
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    long edge_count() const;

private:
    std::vector<std::vector<int>> adj_;
};

// Rooted tree decomposition. Node 0..k-1; parent[root] == -1.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags; // vertex sets, sorted ascending
    std::vector<int> parent;
    int root = -1;

    int node_count() const { return static_cast<int>(bags.size()); }
    // max bag size - 1; -1 for a decomposition with only empty bags
    int width() const;
    std::vector<std::vector<int>> children() const;
    std::vector<int> depths() const;
};

// Vertices = atoms (vertex i-1 for atom i); edges join atoms sharing a rule.
UGraph primal_graph(const ElpProgram& p);

// Vertices = variables of the rule in first-occurrence order; edges join
// variables sharing an atom. Arithmetic subterms contribute their variables
// to the enclosing atom. Returns the graph plus the vertex naming.
struct RuleGraph {
    UGraph graph;
    std::vector<std::string> var_names; // vertex -> variable
};
RuleGraph rule_graph(const NonGroundRule& r);

// Min-fill elimination heuristic. seed == 0 resolves ties deterministically
// (fewest fill edges, then lowest vertex); seed != 0 shuffles among ties.
TreeDecomposition td_minfill(const UGraph& g, unsigned seed = 0);

// Checks the three decomposition conditions plus tree well-formedness.
// Empty result means valid.
std::vector<std::string> td_validate(const UGraph& g, const TreeDecomposition& td);

std::string to_dot(const UGraph& g, const std::vector<std::string>& names = {});
std::string to_dot(const TreeDecomposition& td,
                   const std::vector<std::string>& names = {});

} // namespace selp
