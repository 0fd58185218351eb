#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

namespace detail {

/// Packed upper-triangle adjacency bits of a canonically labelled graph,
/// in graph6 bit order (x(0,1), x(0,2), x(1,2), x(0,3), ...), MSB first.
struct CanonForm {
    int n = 0;
    int words = 0;
    std::array<std::uint64_t, 32> bits{};
    std::array<std::uint8_t, 64> perm{};                 // vertex -> canonical position
    std::vector<std::array<std::uint8_t, 64>> gens;      // discovered automorphisms

    bool same_class(const CanonForm& o) const {
        if (n != o.n) return false;
        for (int w = 0; w < words; ++w)
            if (bits[w] != o.bits[w]) return false;
        return true;
    }

    /// Vertex that lands on the last canonical position.
    int deletion_vertex() const {
        for (int v = 0; v < n; ++v)
            if (perm[v] == n - 1) return v;
        return -1;
    }

    /// True if u and v are provably in one automorphism orbit (sound, not complete).
    bool same_orbit(int u, int v) const {
        if (u == v) return true;
        std::array<std::uint8_t, 64> root;
        for (int i = 0; i < n; ++i) root[i] = static_cast<std::uint8_t>(i);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& g : gens)
            for (int i = 0; i < n; ++i) {
                int a = find(i), b = find(g[i]);
                if (a != b) root[a] = static_cast<std::uint8_t>(b);
            }
        return find(u) == find(v);
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    }

    CanonForm run() {
        CanonForm out;
        out.n = n_;
        out.words = (n_ * (n_ - 1) / 2 + 63) / 64;
        State root;
        for (int p = 0; p < n_; ++p) {
            root.order[p] = static_cast<std::uint8_t>(p);
            root.cell_end[p] = false;
        }
        root.cell_end[n_ - 1] = true;
        have_best_ = false;
        prefix_len_ = 0;
        best_path_len_ = 0;
        search(root);
        for (int w = 0; w < out.words; ++w) out.bits[w] = best_bits_[w];
        for (int p = 0; p < n_; ++p) out.perm[best_order_[p]] = static_cast<std::uint8_t>(p);
        out.gens = std::move(gens_);
        return out;
    }

private:
    struct State {
        std::array<std::uint8_t, 64> order;  // position -> vertex
        std::array<bool, 64> cell_end;
    };

    void refine(State& s) const {
        bool changed = true;
        std::array<std::uint64_t, 64> splitters;
        std::array<int, 64> key;
        while (changed) {
            changed = false;
            int nsplit = 0;
            for (int pos = 0; pos < n_;) {
                std::uint64_t m = 0;
                int end = pos;
                for (;; ++end) {
                    m |= std::uint64_t{1} << s.order[end];
                    if (s.cell_end[end]) break;
                }
                splitters[nsplit++] = m;
                pos = end + 1;
            }
            for (int si = 0; si < nsplit; ++si) {
                std::uint64_t sm = splitters[si];
                for (int pos = 0; pos < n_;) {
                    int end = pos;
                    while (!s.cell_end[end]) ++end;
                    if (end > pos) {
                        bool differ = false;
                        key[pos] = std::popcount(adj_[s.order[pos]] & sm);
                        for (int p = pos + 1; p <= end; ++p) {
                            key[p] = std::popcount(adj_[s.order[p]] & sm);
                            differ |= key[p] != key[pos];
                        }
                        if (differ) {
                            // stable insertion sort by key, descending
                            for (int p = pos + 1; p <= end; ++p) {
                                int k = key[p];
                                std::uint8_t v = s.order[p];
                                int q = p;
                                while (q > pos && key[q - 1] < k) {
                                    key[q] = key[q - 1];
                                    s.order[q] = s.order[q - 1];
                                    --q;
                                }
                                key[q] = k;
                                s.order[q] = v;
                            }
                            for (int p = pos; p < end; ++p)
                                if (key[p] != key[p + 1]) s.cell_end[p] = true;
                            changed = true;
                        }
                    }
                    pos = end + 1;
                }
            }
        }
    }

    static constexpr int no_jump = 1 << 20;

    /// Returns no_jump, or the prefix index whose candidate subtree is now
    /// known to be an automorphic image of an already-explored sibling.
    int leaf(const State& s) {
        std::array<std::uint64_t, 32> bits{};
        long b = 0;
        for (int j = 1; j < n_; ++j) {
            std::uint64_t row = adj_[s.order[j]];
            for (int i = 0; i < j; ++i, ++b)
                if ((row >> s.order[i]) & 1u)
                    bits[b >> 6] |= std::uint64_t{1} << (63 - (b & 63));
        }
        int words = (n_ * (n_ - 1) / 2 + 63) / 64;
        bool better = !have_best_;
        if (!better) {
            for (int w = 0; w < words; ++w) {
                if (bits[w] < best_bits_[w]) {
                    better = true;
                    break;
                }
                if (bits[w] > best_bits_[w]) return no_jump;
            }
        }
        if (better) {
            best_bits_ = bits;
            best_order_ = s.order;
            best_path_ = prefix_;
            best_path_len_ = prefix_len_;
            have_best_ = true;
            return no_jump;
        }
        // equal leaf: best_order_[p] -> s.order[p] is an automorphism
        if (gens_.size() < max_gens_) {
            std::array<std::uint8_t, 64> g{};
            bool identity = true;
            for (int p = 0; p < n_; ++p) {
                g[best_order_[p]] = s.order[p];
                identity &= best_order_[p] == s.order[p];
            }
            if (!identity) gens_.push_back(g);
        }
        // the subtrees diverging from the best path at this index coincide
        // with its sibling's up to the automorphism just found
        int limit = prefix_len_ < best_path_len_ ? prefix_len_ : best_path_len_;
        for (int i = 0; i < limit; ++i)
            if (prefix_[i] != best_path_[i]) return i;
        return no_jump;
    }

    /// Union-find orbits of the subgroup generated by gens fixing the current
    /// prefix pointwise.
    void prefix_orbits(std::array<std::uint8_t, 64>& root) const {
        for (int i = 0; i < n_; ++i) root[i] = static_cast<std::uint8_t>(i);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& g : gens_) {
            bool fixes = true;
            for (int k = 0; k < prefix_len_ && fixes; ++k) fixes = g[prefix_[k]] == prefix_[k];
            if (!fixes) continue;
            for (int i = 0; i < n_; ++i) {
                int a = find(i), b = find(g[i]);
                if (a != b) root[a] = static_cast<std::uint8_t>(b);
            }
        }
    }

    int search(State s) {
        refine(s);
        // first smallest non-singleton cell
        int tpos = -1, tend = -1, tsize = n_ + 1;
        for (int pos = 0; pos < n_;) {
            int end = pos;
            while (!s.cell_end[end]) ++end;
            int size = end - pos + 1;
            if (size > 1 && size < tsize) {
                tpos = pos;
                tend = end;
                tsize = size;
            }
            pos = end + 1;
        }
        if (tpos < 0) return leaf(s);
        std::array<std::uint8_t, 64> tried{};
        int ntried = 0;
        std::array<std::uint8_t, 64> orbit_root;
        for (int p = tpos; p <= tend; ++p) {
            std::uint8_t u = s.order[p];
            if (ntried > 0 && !gens_.empty()) {
                prefix_orbits(orbit_root);
                auto find = [&](int x) {
                    while (orbit_root[x] != x) x = orbit_root[x] = orbit_root[orbit_root[x]];
                    return x;
                };
                int ru = find(u);
                bool skip = false;
                for (int t = 0; t < ntried && !skip; ++t) skip = find(tried[t]) == ru;
                if (skip) continue;
            }
            tried[ntried++] = u;
            State child = s;
            // individualize u: singleton cell at tpos, remainder keeps the cell
            int q = tpos;
            while (child.order[q] != u) ++q;
            while (q > tpos) {
                child.order[q] = child.order[q - 1];
                --q;
            }
            child.order[tpos] = u;
            child.cell_end[tpos] = true;
            prefix_[prefix_len_++] = u;
            int jump = search(child);
            --prefix_len_;
            if (jump != no_jump) {
                if (jump < prefix_len_) return jump;  // divergence above this node
                // jump == prefix_len_: this candidate's subtree was automorphic
                // to an explored sibling's; move on to the next candidate
            }
        }
        return no_jump;
    }

    static constexpr std::size_t max_gens_ = 128;

    int n_;
    std::array<std::uint64_t, 64> adj_{};
    bool have_best_ = false;
    std::array<std::uint64_t, 32> best_bits_{};
    std::array<std::uint8_t, 64> best_order_{};
    std::array<std::uint8_t, 64> best_path_{};
    int best_path_len_ = 0;
    std::vector<std::array<std::uint8_t, 64>> gens_;
    std::array<std::uint8_t, 64> prefix_{};
    int prefix_len_ = 0;
};

inline CanonForm canonical_form(const Graph& g) { return CanonSearch(g).run(); }

} // namespace detail

/// Relabel: vertex v of g becomes vertex perm[v] of the result.
inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
    return h;
}

struct CanonicalLabel {
    std::vector<int> perm;  // vertex -> canonical position
    std::string canon_g6;
};

/// Canonical labelling by individualization-refinement: the permutation sends
/// the graph to the representative with the lexicographically smallest
/// upper-triangle bit string among all refinement-tree leaves.
inline CanonicalLabel canonical_label(const Graph& g) {
    auto form = detail::canonical_form(g);
    CanonicalLabel out;
    out.perm.assign(form.perm.begin(), form.perm.begin() + g.order());
    out.canon_g6 = graph6_encode(apply_permutation(g, out.perm));
    return out;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return detail::canonical_form(g).same_class(detail::canonical_form(h));
}

} // namespace cospec
