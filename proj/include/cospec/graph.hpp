#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// Simple undirected graph on at most 64 vertices.
/// Adjacency is stored as one 64-bit row per vertex (bit j of row i = edge {i,j}).
/// Graphs are value types; every operation below builds a new graph.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > max_vertices)
            throw std::invalid_argument("Graph: vertex count must be in 1.." +
                                        std::to_string(max_vertices));
        adj_.fill(0);
    }

    int order() const { return n_; }

    int edge_count() const {
        int m = 0;
        for (int i = 0; i < n_; ++i) m += std::popcount(adj_[i]);
        return m / 2;
    }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (adj_[i] >> j) & 1u;
    }

    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[i] |= std::uint64_t{1} << j;
        adj_[j] |= std::uint64_t{1} << i;
    }

    /// Neighbourhood of v as a bitmask.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (adj_[i] != o.adj_[i]) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::array<std::uint64_t, max_vertices> adj_;
};

struct DegreeSequence {
    std::vector<int> degrees;

    int min() const {
        int d = degrees.at(0);
        for (int x : degrees) d = x < d ? x : d;
        return d;
    }
    int max() const {
        int d = degrees.at(0);
        for (int x : degrees) d = x > d ? x : d;
        return d;
    }
    /// Number of vertices with the given degree.
    int count(int deg) const {
        int c = 0;
        for (int x : degrees) c += (x == deg);
        return c;
    }
};

inline DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence ds;
    ds.degrees.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) ds.degrees.push_back(g.degree(v));
    return ds;
}

// ---- named constructions ----

/// F_n: n triangles sharing vertex 0; triangle k uses vertices 2k+1, 2k+2.
inline Graph friendship(int n) {
    if (n < 1 || n > 31)
        throw std::invalid_argument("friendship: n must be in 1..31");
    Graph g(2 * n + 1);
    for (int k = 0; k < n; ++k) {
        int a = 2 * k + 1, b = 2 * k + 2;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

/// CP(n): K_{2n} minus the perfect matching {2k, 2k+1}.
inline Graph cocktail_party(int n) {
    if (n < 1 || n > 32)
        throw std::invalid_argument("cocktail_party: n must be in 1..32");
    Graph g(2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (!(j == i + 1 && i % 2 == 0)) g.add_edge(i, j);
    return g;
}

inline Graph cycle(int k) {
    if (k < 3 || k > Graph::max_vertices)
        throw std::invalid_argument("cycle: k must be in 3..64");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Graph path(int k) {
    if (k < 1 || k > Graph::max_vertices)
        throw std::invalid_argument("path: k must be in 1..64");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete(int k) {
    if (k < 1 || k > Graph::max_vertices)
        throw std::invalid_argument("complete: k must be in 1..64");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

/// K_{a,b}: part A = vertices 0..a-1, part B = a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1 || a + b > Graph::max_vertices)
        throw std::invalid_argument("complete_bipartite: sizes out of range");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::max_vertices)
        throw std::invalid_argument("disjoint_union: size overflow");
    Graph u(g.order() + h.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) u.add_edge(i, j);
    int off = g.order();
    for (int i = 0; i < h.order(); ++i)
        for (int j = i + 1; j < h.order(); ++j)
            if (h.has_edge(i, j)) u.add_edge(off + i, off + j);
    return u;
}

/// Join of K_1 with g: the new vertex (index g.order()) is adjacent to all of g.
inline Graph cone(const Graph& g) {
    if (g.order() + 1 > Graph::max_vertices)
        throw std::invalid_argument("cone: size overflow");
    Graph c(g.order() + 1);
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) c.add_edge(i, j);
        c.add_edge(i, g.order());
    }
    return c;
}

/// Kronecker (tensor) product: vertex (i,j) -> i*h.order()+j,
/// edge iff both coordinates are adjacent.
inline Graph kronecker_product(const Graph& g, const Graph& h) {
    int n = g.order() * h.order();
    if (n > Graph::max_vertices)
        throw std::invalid_argument("kronecker_product: size overflow");
    Graph p(n);
    for (int i1 = 0; i1 < g.order(); ++i1)
        for (int i2 = 0; i2 < g.order(); ++i2)
            if (g.has_edge(i1, i2))
                for (int j1 = 0; j1 < h.order(); ++j1)
                    for (int j2 = 0; j2 < h.order(); ++j2)
                        if (h.has_edge(j1, j2)) {
                            int u = i1 * h.order() + j1, v = i2 * h.order() + j2;
                            if (u < v) p.add_edge(u, v);
                        }
    return p;
}

/// Cartesian (box) product: edge iff one coordinate is equal and the other
/// adjacent. cartesian_product(P2, P3) is the domino, two 4-cycles sharing
/// an edge.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    int n = g.order() * h.order();
    if (n > Graph::max_vertices)
        throw std::invalid_argument("cartesian_product: size overflow");
    Graph p(n);
    for (int i1 = 0; i1 < g.order(); ++i1)
        for (int j1 = 0; j1 < h.order(); ++j1) {
            for (int j2 = j1 + 1; j2 < h.order(); ++j2)
                if (h.has_edge(j1, j2))
                    p.add_edge(i1 * h.order() + j1, i1 * h.order() + j2);
            for (int i2 = i1 + 1; i2 < g.order(); ++i2)
                if (g.has_edge(i1, i2))
                    p.add_edge(i1 * h.order() + j1, i2 * h.order() + j1);
        }
    return p;
}

inline Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

/// Induced subgraph on the set bits of `mask`, relabelled 0..k-1 in ascending
/// original order.
inline Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    mask &= g.vertex_mask();
    if (mask == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) keep.push_back(v);
    Graph s(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::uint64_t mask = 0;
    for (int v : verts) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        mask |= std::uint64_t{1} << v;
    }
    return induced_subgraph(g, mask);
}

/// Connected components as vertex sets, ordered by smallest contained vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1u) continue;
        // BFS by mask expansion
        std::uint64_t comp = std::uint64_t{1} << s;
        for (;;) {
            std::uint64_t next = comp;
            std::uint64_t work = comp;
            while (work) {
                int v = std::countr_zero(work);
                work &= work - 1;
                next |= g.neighbors(v);
            }
            if (next == comp) break;
            comp = next;
        }
        seen |= comp;
        std::vector<int> verts;
        while (comp) {
            int v = std::countr_zero(comp);
            comp &= comp - 1;
            verts.push_back(v);
        }
        comps.push_back(std::move(verts));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Drop one vertex, relabelling the rest in ascending order.
inline Graph remove_vertex(const Graph& g, int v) {
    if (g.order() < 2) throw std::invalid_argument("remove_vertex: graph too small");
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t{1} << v));
}

} // namespace cospec
