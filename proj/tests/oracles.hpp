#pragma once

// Independent reference implementations used only by tests. Each one takes a
// different algorithmic route from the library code it checks.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace oracle {

/// Characteristic polynomial by Faddeev-LeVerrier (trace recursion with
/// exact integer divisions), constant term first. Independent of Berkowitz.
inline std::vector<cospec::BigInt> faddeev_leverrier(const cospec::Graph& g) {
    using cospec::BigInt;
    int n = g.order();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) a[i * n + j] = 1;
    std::vector<BigInt> m(a.size(), 0), am(a.size());
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;  // M_1 = I
    for (int k = 1; k <= n; ++k) {
        // AM = A * M_k
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int t = 0; t < n; ++t)
                    if (a[i * n + t] != 0) s += m[t * n + j];
                am[i * n + j] = s;
            }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += am[i * n + i];
        c[n - k] = -tr / k;  // exact
        m = am;
        for (int i = 0; i < n; ++i) m[i * n + i] += c[n - k];
    }
    return c;
}

/// Brute-force canonical form: the lexicographically smallest upper-triangle
/// bit string over all n! labelings. Only sane for n <= 8.
inline std::vector<int> min_adjacency_string(const cospec::Graph& g) {
    int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline cospec::Graph random_graph(int n, double p, std::mt19937& rng) {
    cospec::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace oracle
