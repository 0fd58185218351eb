#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cospec/graph.hpp"

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

/// Characteristic polynomial det(xI - A) of an adjacency matrix:
/// coeffs[k] is the exact integer coefficient of x^k, coeffs[n] = 1.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const CharPoly& o) const { return !(*this == o); }

    /// Number of edges recovered from the x^(n-2) coefficient.
    BigInt edge_count() const { return degree() >= 2 ? BigInt(-coeffs[degree() - 2]) : BigInt(0); }
    /// Number of triangles recovered from the x^(n-3) coefficient.
    BigInt triangle_count() const {
        return degree() >= 3 ? BigInt(-coeffs[degree() - 3] / 2) : BigInt(0);
    }
};

/// Symmetric 0/1 matrix with zero diagonal, rows as 128-bit masks.
/// Wide enough for friendship graphs beyond the Graph vertex cap.
struct BitMatrix {
    int n = 0;
    std::vector<std::array<std::uint64_t, 2>> rows;

    static constexpr int max_dim = 128;

    bool bit(int i, int j) const { return (rows[i][j >> 6] >> (j & 63)) & 1u; }
    void set(int i, int j) {
        rows[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        rows[j][i >> 6] |= std::uint64_t{1} << (i & 63);
    }
};

inline BitMatrix adjacency_bits(const Graph& g) {
    BitMatrix a;
    a.n = g.order();
    a.rows.assign(a.n, {0, 0});
    for (int v = 0; v < a.n; ++v) a.rows[v][0] = g.neighbors(v);
    return a;
}

/// Adjacency of F_n for any n with 2n+1 <= 128 (center = vertex 0).
inline BitMatrix friendship_adjacency(int n) {
    if (n < 1 || 2 * n + 1 > BitMatrix::max_dim)
        throw std::invalid_argument("friendship_adjacency: n out of range");
    BitMatrix a;
    a.n = 2 * n + 1;
    a.rows.assign(a.n, {0, 0});
    for (int k = 0; k < n; ++k) {
        a.set(0, 2 * k + 1);
        a.set(0, 2 * k + 2);
        a.set(2 * k + 1, 2 * k + 2);
    }
    return a;
}

namespace detail {

/// Berkowitz division-free characteristic polynomial of a 0/1 symmetric
/// matrix with zero diagonal. Returns coefficients highest degree first.
/// The inner Krylov products reduce to integer additions because the matrix
/// entries are bits.
template <class Int>
std::vector<Int> berkowitz01(const BitMatrix& a) {
    int n = a.n;
    std::vector<Int> p(2);
    p[0] = 1;
    p[1] = 0;  // zero diagonal
    if (n == 1) return p;
    std::vector<Int> w(n), wn(n), s(n), pn(n + 1);
    for (int r = 2; r <= n; ++r) {
        int t = r - 1;  // the row/column being absorbed
        // w = column above the diagonal; s[j] = R M^j C
        for (int i = 0; i < t; ++i) w[i] = a.bit(t, i) ? 1 : 0;
        for (int j = 0; j + 2 <= r; ++j) {
            Int acc = 0;
            for (int i = 0; i < t; ++i)
                if (a.bit(t, i)) acc += w[i];
            s[j] = acc;
            if (j + 3 <= r) {  // one more Krylov step needed
                for (int i = 0; i < t; ++i) {
                    Int sum = 0;
                    for (int word = 0; word < 2; ++word) {
                        std::uint64_t bitsw = a.rows[i][word];
                        if (word == 1) bitsw &= (t > 64) ? ((std::uint64_t{1} << (t - 64)) - 1) : 0;
                        else if (t < 64) bitsw &= (std::uint64_t{1} << t) - 1;
                        while (bitsw) {
                            int u = std::countr_zero(bitsw) + 64 * word;
                            bitsw &= bitsw - 1;
                            sum += w[u];
                        }
                    }
                    wn[i] = std::move(sum);
                }
                std::swap(w, wn);
            }
        }
        // Toeplitz multiply: pn[i] = p[i] - sum_{d=2..i} s[d-2] * p[i-d]
        for (int i = 0; i <= r; ++i) {
            Int acc = (i <= r - 1) ? p[i] : Int(0);
            for (int d = 2; d <= i; ++d)
                if (i - d <= r - 1) acc -= s[d - 2] * p[i - d];
            pn[i] = std::move(acc);
        }
        p.resize(r + 1);
        for (int i = 0; i <= r; ++i) p[i] = std::move(pn[i]);
    }
    return p;
}

} // namespace detail

/// Exact characteristic polynomial of any 0/1 symmetric matrix.
inline CharPoly char_poly(const BitMatrix& a) {
    auto hi = detail::berkowitz01<BigInt>(a);
    CharPoly cp;
    cp.coeffs.assign(hi.rbegin(), hi.rend());
    return cp;
}

inline CharPoly char_poly(const Graph& g) { return char_poly(adjacency_bits(g)); }

/// Fast path for small graphs: all Berkowitz intermediates of an adjacency
/// matrix with n <= 12 fit in 64 bits. Coefficients constant term first.
inline std::vector<std::int64_t> char_poly_i64(const Graph& g) {
    if (g.order() > 12)
        throw std::invalid_argument("char_poly_i64: order must be <= 12");
    auto hi = detail::berkowitz01<std::int64_t>(adjacency_bits(g));
    return {hi.rbegin(), hi.rend()};
}

// ---- integer polynomial helpers (coefficients constant term first) ----

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Exact expansion of (x+1)(x^2-1)^(n-1)(x^2-x-2n), the closed form of the
/// friendship graph's characteristic polynomial.
inline CharPoly friendship_char_poly(int n) {
    if (n < 1) throw std::invalid_argument("friendship_char_poly: n must be >= 1");
    std::vector<BigInt> p{1, 1};                       // x + 1
    const std::vector<BigInt> q{-1, 0, 1};             // x^2 - 1
    for (int k = 0; k < n - 1; ++k) p = poly_mul(p, q);
    p = poly_mul(p, {BigInt(-2) * n, -1, 1});          // x^2 - x - 2n
    CharPoly cp;
    cp.coeffs = std::move(p);
    return cp;
}

/// Text form: space-separated integer coefficients, constant term first.
inline std::string poly_to_text(const CharPoly& cp) {
    std::string s;
    for (std::size_t k = 0; k < cp.coeffs.size(); ++k) {
        if (k) s += ' ';
        s += cp.coeffs[k].str();
    }
    return s;
}

inline CharPoly poly_from_text(const std::string& line) {
    CharPoly cp;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) cp.coeffs.emplace_back(line.substr(i, j - i));
        i = j;
    }
    if (cp.coeffs.empty()) throw std::invalid_argument("poly_from_text: no coefficients");
    return cp;
}

/// Two distinct vertices with identical (open) neighbourhoods force a zero
/// eigenvalue, hence a zero constant term of the characteristic polynomial.
/// Equal rows already imply the pair is non-adjacent.
inline bool has_duplicate_open_neighborhood(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u) == g.neighbors(v)) return true;
    return false;
}

} // namespace cospec
