#include "superdom/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace superdom {

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u)
        adj[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;  // already lexicographic: outer loop ascending, for_each ascending
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside vertex range 0.." + std::to_string(n - 1));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj[u].add(v);
        g.adj[v].add(u);
    }
    return g;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.adj[v]; }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet s = g.adj[v];
    s.add(v);
    return s;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& xs) {
    VertexSet s(g.n);
    xs.for_each([&](Vertex v) { s |= g.adj[v]; });
    return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& xs) {
    return open_neighborhood(g, xs) | xs;
}

// --- families ---------------------------------------------------------

namespace {
void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle graph needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph empty_graph(int n) {
    require(n >= 1, "empty graph needs n >= 1");
    return build_graph(n, {});
}

Graph star_graph(int r) {
    require(r >= 1, "star graph needs r >= 1 leaves");
    std::vector<Edge> e;
    for (int i = 1; i <= r; ++i) e.emplace_back(0, i);
    return build_graph(r + 1, e);
}

Graph complete_bipartite(int r, int t) {
    require(r >= 1 && t >= 1, "complete bipartite graph needs both sides non-empty");
    std::vector<Edge> e;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, r + j);
    return build_graph(r + t, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(parts.size() >= 2, "complete multipartite graph needs at least 2 parts");
    int n = 0;
    for (int p : parts) {
        require(p >= 1, "complete multipartite part sizes must be >= 1");
        n += p;
    }
    // part id per vertex, parts laid out consecutively
    std::vector<int> part_of(n);
    int base = 0, id = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) part_of[base + i] = id;
        base += p;
        ++id;
    }
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph hypercube(int k) {
    require(k >= 1, "hypercube needs dimension >= 1");
    require(k <= 20, "hypercube dimension too large");
    int n = 1 << k;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < k; ++b) {
            int v = u ^ (1 << b);
            if (u < v) e.emplace_back(u, v);
        }
    return build_graph(n, e);
}

// --- operations -------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(g.n + u, g.n + v);
    return build_graph(g.n + h.n, e);
}

Graph join(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = 0; v < h.n; ++v) {
            r.adj[u].add(g.n + v);
            r.adj[g.n + v].add(u);
        }
    return r;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    require(g.n >= 1 && h.n >= 1, "cartesian product needs non-empty factors");
    std::vector<Edge> e;
    for (Vertex a = 0; a < g.n; ++a)
        for (Vertex b = 0; b < h.n; ++b) {
            Vertex p = product_vertex(g, h, a, b);
            // same g-coordinate, h-edge
            h.adj[b].for_each([&](Vertex b2) {
                if (b < b2) e.emplace_back(p, product_vertex(g, h, a, b2));
            });
            // same h-coordinate, g-edge
            g.adj[a].for_each([&](Vertex a2) {
                if (a < a2) e.emplace_back(p, product_vertex(g, h, a2, b));
            });
        }
    return build_graph(g.n * h.n, e);
}

Graph corona_product(const Graph& g, const Graph& h) {
    require(g.n >= 1 && h.n >= 1, "corona product needs non-empty factors");
    std::vector<Edge> e = g.edges();
    for (Vertex a = 0; a < g.n; ++a) {
        int base = g.n + a * h.n;
        for (auto [u, v] : h.edges()) e.emplace_back(base + u, base + v);
        for (Vertex b = 0; b < h.n; ++b) e.emplace_back(a, base + b);
    }
    return build_graph(g.n + g.n * h.n, e);
}

LineGraphResult line_graph(const Graph& g) {
    auto es = g.edges();
    require(!es.empty(), "line graph of an edgeless graph is not supported");
    int m = (int)es.size();
    std::vector<Edge> le;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) le.emplace_back(i, j);
        }
    return {build_graph(m, le), es};
}

// --- structure --------------------------------------------------------

TwinPartition twin_partition(const Graph& g) {
    TwinPartition part;
    std::vector<bool> placed(g.n, false);
    for (Vertex u = 0; u < g.n; ++u) {
        if (placed[u]) continue;
        VertexSet open_class(g.n), closed_class(g.n);
        open_class.add(u);
        closed_class.add(u);
        VertexSet nu_closed = closed_neighborhood(g, u);
        for (Vertex v = u + 1; v < g.n; ++v) {
            if (placed[v]) continue;
            if (g.adj[v] == g.adj[u]) open_class.add(v);                       // non-adjacent twins
            else if (closed_neighborhood(g, v) == nu_closed) closed_class.add(v);  // adjacent twins
        }
        // maximal class containing u: equal neighborhoods is transitive within
        // each flavor, and a class of size >= 2 can only be one flavor
        TwinClass cls{VertexSet(g.n), TwinKind::singleton};
        if (open_class.size() >= 2) {
            cls.members = open_class;
            cls.kind = TwinKind::false_twin;
        } else if (closed_class.size() >= 2) {
            cls.members = closed_class;
            cls.kind = TwinKind::true_twin;
        } else {
            cls.members = open_class;  // just {u}
            cls.kind = TwinKind::singleton;
        }
        cls.members.for_each([&](Vertex v) { placed[v] = true; });
        part.classes.push_back(std::move(cls));
    }
    return part;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    VertexSet seen(g.n);
    seen.add(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = open_neighborhood(g, frontier) - seen;
        seen |= next;
        frontier = next;
    }
    return seen.size() == g.n;
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.n; ++v)
        if (g.adj[v].empty()) return true;
    return false;
}

bool is_empty_graph(const Graph& g) { return g.edge_count() == 0; }

int max_degree(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

int min_degree(const Graph& g) {
    if (g.n == 0) return 0;
    int d = g.n;
    for (Vertex v = 0; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet s(g.n);
    for (Vertex v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) s.add(v);
    return s;
}

int degree_one_count(const Graph& g) {
    int c = 0;
    for (Vertex v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) ++c;
    return c;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (Vertex s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            bool ok = true;
            g.adj[u].for_each([&](Vertex v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<Vertex> verts = keep.to_vector();
    std::vector<int> new_id(g.n, -1);
    for (int i = 0; i < (int)verts.size(); ++i) new_id[verts[i]] = i;
    std::vector<Edge> e;
    for (Vertex u : verts)
        g.adj[u].for_each([&](Vertex v) {
            if (u < v && new_id[v] != -1) e.emplace_back(new_id[u], new_id[v]);
        });
    return build_graph((int)verts.size(), e);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unseen = VertexSet::full(g.n);
    while (!unseen.empty()) {
        VertexSet comp(g.n);
        comp.add(unseen.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next = open_neighborhood(g, frontier) - comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        unseen -= comp;
    }
    return comps;  // ordered by smallest member
}

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    for (Vertex v = 0; v < a.n; ++v)
        if (a.adj[v] != b.adj[v]) return false;
    return true;
}

}  // namespace superdom
