#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/graph.hpp"

namespace cospec {

/// Selects which isomorphism classes an enumeration run emits.
struct EnumFilter {
    int max_vertices = 1;  // classes are emitted at exactly this order
    std::optional<int> exact_edges;
    std::optional<int> min_degree;
    bool connected_only = false;
    std::optional<int> max_edges;

    void validate() const {
        if (max_vertices < 1 || max_vertices > 11)
            throw std::invalid_argument("EnumFilter: max_vertices must be in 1..11");
        int cap = max_vertices * (max_vertices - 1) / 2;
        if (exact_edges && (*exact_edges < 0 || *exact_edges > cap))
            throw std::invalid_argument("EnumFilter: exact_edges out of range");
        if (max_edges && *max_edges < 0)
            throw std::invalid_argument("EnumFilter: max_edges out of range");
        if (exact_edges && max_edges && *exact_edges > *max_edges)
            throw std::invalid_argument("EnumFilter: exact_edges exceeds max_edges");
        if (min_degree && *min_degree < 0)
            throw std::invalid_argument("EnumFilter: min_degree out of range");
    }
};

struct EnumOptions {
    int workers = 1;
    int split_order = 7;            // sequential up to here, subtrees in parallel
    bool reverse_children = false;  // alternate augmentation order for cross-checks
};

namespace detail {

/// Isomorph-free generation by canonical augmentation: a child (one vertex
/// added to a parent) is kept only when deleting its canonically-last vertex
/// recovers the parent's isomorphism class. Children of one parent are
/// deduplicated by canonical form, so every class is emitted exactly once.
class Enumerator {
public:
    Enumerator(const EnumFilter& f, const EnumOptions& o,
               std::function<void(const Graph&, int)> visit)
        : f_(f), o_(o), visit_(std::move(visit)) {
        f_.validate();
        if (o_.workers < 1) throw std::invalid_argument("EnumOptions: workers must be >= 1");
        edge_cap_ = f_.max_vertices * (f_.max_vertices - 1) / 2;
        if (f_.max_edges) edge_cap_ = std::min(edge_cap_, *f_.max_edges);
        if (f_.exact_edges) edge_cap_ = std::min(edge_cap_, *f_.exact_edges);
    }

    void run() {
        Graph k1(1);
        auto form = canonical_form(k1);
        int split = std::min(o_.split_order, f_.max_vertices);
        if (o_.workers <= 1) {
            expand(k1, form, f_.max_vertices, 0);
            return;
        }
        // collect subtree roots sequentially, then farm them out round-robin
        std::vector<std::pair<Graph, CanonForm>> roots;
        expand_to(k1, form, split, roots);
        std::vector<std::thread> pool;
        for (int w = 0; w < o_.workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < roots.size(); i += o_.workers)
                    expand(roots[i].first, roots[i].second, f_.max_vertices, w);
            });
        for (auto& t : pool) t.join();
    }

private:
    bool final_ok(const Graph& g) const {
        if (f_.exact_edges && g.edge_count() != *f_.exact_edges) return false;
        if (f_.max_edges && g.edge_count() > *f_.max_edges) return false;
        if (f_.min_degree) {
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) < *f_.min_degree) return false;
        }
        if (f_.connected_only && !is_connected(g)) return false;
        return true;
    }

    /// Largest number of edges the remaining augmentations can still add.
    int future_capacity(int order) const {
        int cap = 0;
        for (int j = order; j < f_.max_vertices; ++j) cap += j;
        return cap;
    }

    template <class ChildFn>
    void for_each_child(const Graph& g, const CanonForm& gform, ChildFn&& fn) {
        int k = g.order();
        int m = g.edge_count();
        int future = future_capacity(k + 1);
        std::unordered_set<std::uint64_t> seen;
        std::uint64_t nmask = std::uint64_t{1} << k;
        for (std::uint64_t step = 0; step < nmask; ++step) {
            std::uint64_t s = o_.reverse_children ? (nmask - 1 - step) : step;
            int me = m + std::popcount(s);
            if (me > edge_cap_) continue;
            if (f_.exact_edges && me + future < *f_.exact_edges) continue;
            Graph child(k + 1);
            for (int i = 0; i < k; ++i) {
                std::uint64_t row = g.neighbors(i) >> i;
                for (int j = i + 1; j < k; ++j)
                    if ((row >> (j - i)) & 1u) child.add_edge(i, j);
                if ((s >> i) & 1u) child.add_edge(i, k);
            }
            auto cf = canonical_form(child);
            if (!seen.insert(cf.bits[0]).second) continue;
            int del = cf.deletion_vertex();
            bool accept = (del == k) || cf.same_orbit(del, k);
            if (!accept)
                accept = canonical_form(remove_vertex(child, del)).same_class(gform);
            if (accept) fn(child, cf);
        }
    }

    void expand(const Graph& g, const CanonForm& gform, int target, int worker) {
        if (g.order() == target) {
            if (final_ok(g)) visit_(g, worker);
            return;
        }
        for_each_child(g, gform,
                       [&](const Graph& c, const CanonForm& cf) { expand(c, cf, target, worker); });
    }

    void expand_to(const Graph& g, const CanonForm& gform, int split,
                   std::vector<std::pair<Graph, CanonForm>>& out) {
        if (g.order() == split) {
            out.emplace_back(g, gform);
            return;
        }
        for_each_child(g, gform,
                       [&](const Graph& c, const CanonForm& cf) { expand_to(c, cf, split, out); });
    }

    EnumFilter f_;
    EnumOptions o_;
    std::function<void(const Graph&, int)> visit_;
    int edge_cap_;
};

} // namespace detail

/// Stream every isomorphism class matching the filter. With several workers
/// the visitor runs concurrently; the worker index (0-based) lets callers
/// keep per-worker accumulators and merge deterministically afterwards.
inline void enumerate_graphs(const EnumFilter& f, const EnumOptions& o,
                             const std::function<void(const Graph&, int)>& visit) {
    detail::Enumerator(f, o, visit).run();
}

inline void enumerate_graphs(const EnumFilter& f,
                             const std::function<void(const Graph&)>& visit) {
    enumerate_graphs(f, EnumOptions{}, [&](const Graph& g, int) { visit(g); });
}

inline std::uint64_t enumerate_count(const EnumFilter& f, const EnumOptions& o = {}) {
    std::vector<std::uint64_t> counts(std::max(1, o.workers), 0);
    enumerate_graphs(f, o, [&](const Graph&, int w) { ++counts[w]; });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

/// Canonical graph6 strings of every class, sorted (deterministic across
/// worker counts and augmentation orders).
inline std::vector<std::string> enumerate_collect(const EnumFilter& f, const EnumOptions& o = {}) {
    std::vector<std::vector<std::string>> per(std::max(1, o.workers));
    enumerate_graphs(f, o, [&](const Graph& g, int w) {
        per[w].push_back(canonical_label(g).canon_g6);
    });
    std::vector<std::string> all;
    for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace cospec
