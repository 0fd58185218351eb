#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/counting.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/graph.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

/// Outcome of a cospectral-mate search over one vertex count.
struct SearchReport {
    std::string target_g6;            // canonical form of the target
    CharPoly target_charpoly;
    std::uint64_t classes_scanned = 0;
    std::vector<std::string> mates;   // canonical graph6, sorted, target excluded
    double elapsed_seconds = 0;
    std::vector<std::string> audit;   // structural facts recorded for review

    bool ds_within_scope() const { return mates.empty(); }
};

struct SearchOptions {
    int workers = 1;
    bool edge_prefilter = true;  // prune on the spectrum-determined edge count
};

/// All isomorphism classes on scope_vertices vertices whose characteristic
/// polynomial equals the target's exactly, excluding the target's own class.
inline SearchReport cospectral_mates(const Graph& target, int scope_vertices,
                                     const SearchOptions& opts = {}) {
    if (scope_vertices != target.order())
        throw std::invalid_argument(
            "cospectral_mates: scope must equal the target order (cospectral graphs "
            "share their vertex count)");
    if (scope_vertices > 11)
        throw std::invalid_argument("cospectral_mates: scope too large (max 11 vertices)");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep;
    auto target_canon = canonical_label(target);
    rep.target_g6 = target_canon.canon_g6;
    rep.target_charpoly = char_poly(target);
    auto target_i64 = char_poly_i64(target);

    EnumFilter f;
    f.max_vertices = scope_vertices;
    if (opts.edge_prefilter) f.exact_edges = target.edge_count();

    EnumOptions eo;
    eo.workers = opts.workers;
    int nworkers = std::max(1, opts.workers);
    std::vector<std::vector<std::string>> mates(nworkers);
    std::vector<std::uint64_t> scanned(nworkers, 0);
    enumerate_graphs(f, eo, [&](const Graph& g, int w) {
        ++scanned[w];
        if (char_poly_i64(g) != target_i64) return;
        auto canon = canonical_label(g);
        if (canon.canon_g6 == rep.target_g6) return;
        mates[w].push_back(canon.canon_g6);
    });
    for (int w = 0; w < nworkers; ++w) {
        rep.classes_scanned += scanned[w];
        rep.mates.insert(rep.mates.end(), mates[w].begin(), mates[w].end());
    }
    std::sort(rep.mates.begin(), rep.mates.end());

    // re-verify every mate with full-precision arithmetic
    for (const auto& g6 : rep.mates)
        if (char_poly(graph6_decode(g6)) != rep.target_charpoly)
            throw std::logic_error("cospectral_mates: fast-path mate failed exact recheck");

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline SearchReport cospectral_mates(const Graph& target, const SearchOptions& opts = {}) {
    return cospectral_mates(target, target.order(), opts);
}

/// Mate search plus an audit trail of the spectrum-determined structure the
/// search could exploit. Prefilters beyond the edge count stay audit-only so
/// the unpruned enumeration remains the ground truth.
inline SearchReport certify_ds(const Graph& target, const SearchOptions& opts = {}) {
    if (target.order() > 11)
        throw std::invalid_argument("certify_ds: scope too large (max 11 vertices)");
    SearchReport rep = cospectral_mates(target, target.order(), opts);
    const CharPoly& cp = rep.target_charpoly;
    rep.audit.push_back("edge count " + cp.edge_count().str() +
                        " is spectrum-determined (x^(n-2) coefficient); prefilter " +
                        (opts.edge_prefilter ? "applied" : "off"));
    rep.audit.push_back("triangle count " + cp.triangle_count().str() +
                        " is spectrum-determined (x^(n-3) coefficient); audit only");
    if (target.order() % 2 == 1 && target.order() >= 3 &&
        are_cospectral(target, friendship((target.order() - 1) / 2)))
        rep.audit.push_back(
            "friendship-cospectral target: any mate is connected or K2's plus one component; "
            "audit only");
    rep.audit.push_back(rep.mates.empty() ? "verdict: DS within exhaustive scope"
                                          : "verdict: not DS, " + std::to_string(rep.mates.size()) +
                                                " mate(s) found");
    return rep;
}

enum class ForbiddenReason { SecondEigTooLarge, TwoEigsBelowMinusOne, NotForbidden };

/// Application of the two interlacing exclusion criteria for subgraphs of a
/// friendship-cospectral graph: lambda2 > 1, or two eigenvalues below -1.
struct ForbiddenVerdict {
    std::string case_g6;
    double lambda2 = 0;
    int eigs_below_minus1 = 0;
    ForbiddenReason verdict = ForbiddenReason::NotForbidden;
};

inline const char* to_string(ForbiddenReason r) {
    switch (r) {
        case ForbiddenReason::SecondEigTooLarge: return "SecondEigTooLarge";
        case ForbiddenReason::TwoEigsBelowMinusOne: return "TwoEigsBelowMinusOne";
        default: return "NotForbidden";
    }
}

inline ForbiddenVerdict classify_forbidden(const Graph& g, double tau = tol::eig) {
    ForbiddenVerdict v;
    v.case_g6 = canonical_label(g).canon_g6;
    auto ev = eigenvalues(g).values;
    v.lambda2 = ev.size() > 1 ? ev[1] : ev[0];
    for (double x : ev) v.eigs_below_minus1 += (x < -1 - tau);
    if (ev.size() > 1 && v.lambda2 > 1 + tau)
        v.verdict = ForbiddenReason::SecondEigTooLarge;
    else if (v.eigs_below_minus1 >= 2)
        v.verdict = ForbiddenReason::TwoEigsBelowMinusOne;
    return v;
}

namespace detail {

class CaseCollector {
public:
    void add(const Graph& g) {
        auto key = canonical_label(g).canon_g6;
        if (seen_.insert(key).second) cases_.push_back(g);
    }
    std::vector<Graph> take() { return std::move(cases_); }

private:
    std::unordered_set<std::string> seen_;
    std::vector<Graph> cases_;
};

inline std::vector<int> nonfrozen_vertices(const Graph& base, std::uint64_t frozen) {
    std::vector<int> nf;
    for (int v = 0; v < base.order(); ++v)
        if (!((frozen >> v) & 1u)) nf.push_back(v);
    return nf;
}

inline Graph grow(const Graph& base, int extra) {
    Graph g(base.order() + extra);
    for (int i = 0; i < base.order(); ++i)
        for (int j = i + 1; j < base.order(); ++j)
            if (base.has_edge(i, j)) g.add_edge(i, j);
    return g;
}

template <class Fn>
void for_each_edge_subset(const std::vector<std::pair<int, int>>& pool, Graph g, Fn&& fn) {
    std::uint64_t total = std::uint64_t{1} << pool.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        Graph h = g;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if ((s >> k) & 1u) h.add_edge(pool[k].first, pool[k].second);
        fn(h);
    }
}

} // namespace detail

/// Every way a triangle can attach to the base: sharing two adjacent
/// non-frozen vertices, one non-frozen vertex, or none, plus any subset of
/// connecting edges from the new vertices to non-frozen base vertices.
/// Frozen vertices keep their base degree throughout. One representative per
/// isomorphism class, in generation order.
inline std::vector<Graph> triangle_attachment_cases(const Graph& base, std::uint64_t frozen) {
    if (base.order() + 3 > 12)
        throw std::invalid_argument("triangle_attachment_cases: base too large (order + 3 <= 12)");
    auto nf = detail::nonfrozen_vertices(base, frozen);
    detail::CaseCollector out;

    // two shared vertices: the shared pair must already be a base edge
    for (std::size_t a = 0; a < nf.size(); ++a)
        for (std::size_t b = a + 1; b < nf.size(); ++b) {
            if (!base.has_edge(nf[a], nf[b])) continue;
            Graph g = detail::grow(base, 1);
            int w = base.order();
            g.add_edge(nf[a], w);
            g.add_edge(nf[b], w);
            std::vector<std::pair<int, int>> pool;
            for (int t : nf)
                if (t != nf[a] && t != nf[b]) pool.emplace_back(w, t);
            detail::for_each_edge_subset(pool, g, [&](const Graph& h) { out.add(h); });
        }

    // one shared vertex
    for (int u : nf) {
        Graph g = detail::grow(base, 2);
        int p = base.order(), q = base.order() + 1;
        g.add_edge(u, p);
        g.add_edge(u, q);
        g.add_edge(p, q);
        std::vector<std::pair<int, int>> pool;
        for (int x : {p, q})
            for (int t : nf)
                if (t != u) pool.emplace_back(x, t);
        detail::for_each_edge_subset(pool, g, [&](const Graph& h) { out.add(h); });
    }

    // disjoint triangle
    {
        Graph g = detail::grow(base, 3);
        int p = base.order(), q = p + 1, r = p + 2;
        g.add_edge(p, q);
        g.add_edge(p, r);
        g.add_edge(q, r);
        std::vector<std::pair<int, int>> pool;
        for (int x : {p, q, r})
            for (int t : nf) pool.emplace_back(x, t);
        detail::for_each_edge_subset(pool, g, [&](const Graph& h) { out.add(h); });
    }
    return out.take();
}

/// Every way to complete the base with edges among its non-frozen vertices.
inline std::vector<Graph> edge_completion_cases(const Graph& base, std::uint64_t frozen) {
    auto nf = detail::nonfrozen_vertices(base, frozen);
    std::vector<std::pair<int, int>> pool;
    for (std::size_t a = 0; a < nf.size(); ++a)
        for (std::size_t b = a + 1; b < nf.size(); ++b)
            if (!base.has_edge(nf[a], nf[b])) pool.emplace_back(nf[a], nf[b]);
    detail::CaseCollector out;
    detail::for_each_edge_subset(pool, base, [&](const Graph& h) { out.add(h); });
    return out.take();
}

/// Every way to attach one new vertex: joined to the anchor plus any subset
/// of the other non-frozen base vertices.
inline std::vector<Graph> pendant_attachment_cases(const Graph& base, std::uint64_t frozen,
                                                   int anchor) {
    if ((frozen >> anchor) & 1u)
        throw std::invalid_argument("pendant_attachment_cases: anchor is frozen");
    Graph g = detail::grow(base, 1);
    int t = base.order();
    g.add_edge(anchor, t);
    std::vector<std::pair<int, int>> pool;
    for (int v : detail::nonfrozen_vertices(base, frozen))
        if (v != anchor) pool.emplace_back(t, v);
    detail::CaseCollector out;
    detail::for_each_edge_subset(pool, g, [&](const Graph& h) { out.add(h); });
    return out.take();
}

} // namespace cospec
