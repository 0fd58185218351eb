#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

/// Per-vertex triangle membership counts: t[i] = (A^3)_ii / 2.
struct TriangleProfile {
    std::vector<std::int64_t> t;

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto x : t) s += x;
        return s;
    }
};

inline TriangleProfile triangle_profile(const Graph& g) {
    TriangleProfile tp;
    tp.t.assign(g.order(), 0);
    for (int i = 0; i < g.order(); ++i) {
        std::uint64_t ni = g.neighbors(i);
        std::uint64_t work = ni;
        std::int64_t walks = 0;  // ordered pairs (j,k) of adjacent neighbours
        while (work) {
            int j = std::countr_zero(work);
            work &= work - 1;
            walks += std::popcount(ni & g.neighbors(j));
        }
        tp.t[i] = walks / 2;
    }
    return tp;
}

inline std::int64_t count_c3(const Graph& g) { return closed_walk_count(g, 3) / 6; }

inline std::int64_t count_c4(const Graph& g) {
    std::int64_t d2 = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::int64_t d = g.degree(v);
        d2 += d * d;
    }
    return (closed_walk_count(g, 4) - 2 * d2 + 2 * g.edge_count()) / 8;
}

/// Paws (triangle with one pendant edge), counted as subgraphs:
/// sum over vertices of t_i * (deg_i - 2).
inline std::int64_t count_c3_star(const Graph& g) {
    auto tp = triangle_profile(g);
    std::int64_t s = 0;
    for (int v = 0; v < g.order(); ++v) s += tp.t[v] * (g.degree(v) - 2);
    return s;
}

/// 5-cycles from the closed-walk identity
/// tr(A^5) = 30 N(C3) + 10 N(C5) + 10 N(C3*). The division must be exact.
inline std::int64_t count_c5(const Graph& g) {
    std::int64_t rem = closed_walk_count(g, 5) - 30 * count_c3(g) - 10 * count_c3_star(g);
    if (rem % 10 != 0)
        throw std::logic_error("count_c5: walk identity produced a non-integral count");
    return rem / 10;
}

struct CountReport {
    std::int64_t n_c3 = 0, n_c4 = 0, n_c5 = 0, n_c3_star = 0;
};

inline CountReport count_report(const Graph& g) {
    return {count_c3(g), count_c4(g), count_c5(g), count_c3_star(g)};
}

namespace detail {

/// Pattern vertices ordered by descending degree, ties by index.
inline std::vector<int> pattern_order(const Graph& pattern) {
    std::vector<int> ord(pattern.order());
    for (int i = 0; i < pattern.order(); ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    return ord;
}

template <bool Induced>
bool extend_match(const Graph& g, const Graph& pat, const std::vector<int>& ord,
                  std::vector<int>& image, std::uint64_t used, std::size_t depth,
                  std::int64_t* counter) {
    if (depth == ord.size()) {
        if (counter) ++*counter;
        return !counter;  // stop at the first match when only existence is asked
    }
    int u = ord[depth];
    for (int v = 0; v < g.order(); ++v) {
        if ((used >> v) & 1u) continue;
        if (g.degree(v) < pat.degree(u)) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            bool pe = pat.has_edge(u, ord[k]);
            bool ge = g.has_edge(v, image[k]);
            ok = Induced ? (pe == ge) : (!pe || ge);
        }
        if (!ok) continue;
        image[depth] = v;
        if (extend_match<Induced>(g, pat, ord, image, used | (std::uint64_t{1} << v),
                                  depth + 1, counter))
            return true;
    }
    return false;
}

inline std::int64_t injective_homomorphisms(const Graph& pat, const Graph& g) {
    auto ord = pattern_order(pat);
    std::vector<int> image(ord.size());
    std::int64_t count = 0;
    extend_match<false>(g, pat, ord, image, 0, 0, &count);
    return count;
}

} // namespace detail

/// Does some vertex subset of g induce a copy of the pattern?
/// Backtracking over pattern vertices in descending-degree order.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return false;
    auto ord = detail::pattern_order(pattern);
    std::vector<int> image(ord.size());
    return detail::extend_match<true>(g, pattern, ord, image, 0, 0, nullptr);
}

enum class CountMode { subgraph, induced };

/// Reference oracle, exponential time, test scale only.
/// subgraph mode counts copies (injective homomorphisms divided by the
/// pattern's automorphisms); induced mode counts vertex subsets.
inline std::int64_t brute_force_count(const Graph& g, const Graph& pattern, CountMode mode) {
    if (pattern.order() > 8)
        throw std::invalid_argument("brute_force_count: pattern too large (max 8 vertices)");
    if (pattern.order() > g.order()) return 0;
    if (mode == CountMode::subgraph) {
        std::int64_t homs = detail::injective_homomorphisms(pattern, g);
        std::int64_t aut = detail::injective_homomorphisms(pattern, pattern);
        return homs / aut;
    }
    // induced: iterate k-subsets of vertices (Gosper's hack)
    int n = g.order(), k = pattern.order();
    if (n > 63)
        throw std::invalid_argument("brute_force_count: induced mode supports at most 63 vertices");
    std::int64_t count = 0;
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (subset < limit) {
        if (are_isomorphic(induced_subgraph(g, subset), pattern)) ++count;
        std::uint64_t c = subset & -subset, r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    return count;
}

namespace detail {

inline bool is_cycle_graph(const Graph& h) {
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) != 2) return false;
    return is_connected(h);
}

} // namespace detail

/// Induced odd cycles C_m (5 <= m <= max_len) and induced complements of
/// such, exhaustively over vertex subsets. Each qualifying subset is
/// reported once, ascending by size then by subset order.
inline std::vector<std::vector<int>> find_odd_holes_and_antiholes(const Graph& g, int max_len) {
    if (max_len > g.order())
        throw std::invalid_argument("find_odd_holes_and_antiholes: max_len exceeds order");
    if (g.order() > 63)
        throw std::invalid_argument("find_odd_holes_and_antiholes: scan supports at most 63 vertices");
    std::vector<std::vector<int>> found;
    for (int m = 5; m <= max_len; m += 2) {
        std::uint64_t subset = (std::uint64_t{1} << m) - 1;
        std::uint64_t limit = std::uint64_t{1} << g.order();
        while (subset < limit) {
            Graph h = induced_subgraph(g, subset);
            if (detail::is_cycle_graph(h) || detail::is_cycle_graph(complement(h))) {
                std::vector<int> verts;
                for (int v = 0; v < g.order(); ++v)
                    if ((subset >> v) & 1u) verts.push_back(v);
                found.push_back(std::move(verts));
            }
            std::uint64_t c = subset & -subset, r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    return found;
}

} // namespace cospec
