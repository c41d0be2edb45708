#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superdom/vertex_set.hpp"

namespace superdom {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// VertexSet per vertex. Built through the free functions below; treated as
// immutable afterwards.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    bool adjacent(Vertex u, Vertex v) const { return adj[u].contains(v); }
    int degree(Vertex v) const { return adj[v].size(); }
    const VertexSet& neighbors(Vertex v) const { return adj[v]; }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& a : adj) twice += a.size();
        return twice / 2;
    }

    // Edges as (u,v) with u<v, sorted lexicographically.
    std::vector<Edge> edges() const;
};

// Validates vertex range, rejects self-loops, ignores duplicate edges.
Graph build_graph(int n, const std::vector<Edge>& edges);

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet open_neighborhood(const Graph& g, const VertexSet& xs);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs);

// --- families ---------------------------------------------------------

Graph path_graph(int n);          // n >= 1
Graph cycle_graph(int n);         // n >= 3
Graph complete_graph(int n);      // n >= 1
Graph empty_graph(int n);         // n >= 1
Graph star_graph(int r);          // K_{1,r}, r >= 1; center is vertex 0
Graph complete_bipartite(int r, int t);          // sides r then t, r,t >= 1
Graph complete_multipartite(const std::vector<int>& parts);  // >= 2 parts
Graph hypercube(int k);           // k >= 1, vertex index = coordinate bitmask

// --- operations -------------------------------------------------------

// Vertices of g keep their labels, vertices of h are shifted by g.n.
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

// Cartesian product; pair (a,b) gets index a*h.n + b.
Graph cartesian_product(const Graph& g, const Graph& h);
inline Vertex product_vertex(const Graph& /*g*/, const Graph& h, Vertex a, Vertex b) { return a * h.n + b; }

// Corona: one copy of h per vertex of g, that vertex joined to its copy.
// Vertex a of g stays a; vertex b of copy a becomes g.n + a*h.n + b.
Graph corona_product(const Graph& g, const Graph& h);

// Line graph; vertex i of the result is edges()[i] of the input.
// Rejects graphs with no edges (the line graph would be empty on 0 vertices).
struct LineGraphResult {
    Graph graph;
    std::vector<Edge> vertex_edge;  // result vertex -> original edge
};
LineGraphResult line_graph(const Graph& g);

// --- structure --------------------------------------------------------

enum class TwinKind { singleton, false_twin, true_twin };

struct TwinClass {
    VertexSet members;
    TwinKind kind;
};

// Partition into maximal twin classes (equal open or closed neighborhoods).
// Classes are ordered by their smallest member; t(G) = classes.size().
struct TwinPartition {
    std::vector<TwinClass> classes;
    int count() const { return (int)classes.size(); }
};
TwinPartition twin_partition(const Graph& g);

bool is_connected(const Graph& g);       // single-vertex graphs are connected
bool has_isolated_vertex(const Graph& g);
bool is_empty_graph(const Graph& g);     // no edges
int max_degree(const Graph& g);
int min_degree(const Graph& g);
VertexSet universal_vertices(const Graph& g);
int degree_one_count(const Graph& g);

// Two-coloring (values 0/1) if bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Induced subgraph on `keep`, relabelled 0..|keep|-1 preserving order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

std::vector<VertexSet> connected_components(const Graph& g);

bool graphs_equal(const Graph& a, const Graph& b);  // same labelled graph

}  // namespace superdom
