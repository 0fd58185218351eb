#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec {

namespace tol {
inline constexpr double group = 1e-7;    // multiplicity grouping
inline constexpr double eig = 1e-9;      // eigenvalue comparisons
inline constexpr double fixture = 5e-6;  // values quoted to 5-6 digits
} // namespace tol

/// All real eigenvalues in descending order plus multiplicity groups
/// (representative = group mean).
struct Spectrum {
    std::vector<double> values;
    std::vector<std::pair<double, int>> groups;
};

namespace detail {

/// Cyclic Jacobi on a dense symmetric matrix; returns eigenvalues (diagonal)
/// and, when wanted, the accumulated rotations (column k = eigenvector k).
/// Sweeps run in a fixed row-major order until the off-diagonal Frobenius
/// norm drops below 1e-12.
class JacobiSolver {
public:
    JacobiSolver(std::vector<double> a, int n, bool want_vectors)
        : a_(std::move(a)), n_(n), want_vectors_(want_vectors) {
        if (want_vectors_) {
            v_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
            for (int i = 0; i < n_; ++i) v_[i * n_ + i] = 1.0;
        }
        solve();
    }

    std::vector<double> eigenvalues() const {
        std::vector<double> ev(n_);
        for (int i = 0; i < n_; ++i) ev[i] = a_[i * n_ + i];
        return ev;
    }

    /// Component i of eigenvector k.
    double vec(int i, int k) const { return v_[i * n_ + k]; }

private:
    void rotate(int p, int q) {
        double apq = a_[p * n_ + q];
        if (apq == 0.0) return;
        double app = a_[p * n_ + p], aqq = a_[q * n_ + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n_; ++k) {
            double akp = a_[k * n_ + p], akq = a_[k * n_ + q];
            a_[k * n_ + p] = c * akp - s * akq;
            a_[k * n_ + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n_; ++k) {
            double apk = a_[p * n_ + k], aqk = a_[q * n_ + k];
            a_[p * n_ + k] = c * apk - s * aqk;
            a_[q * n_ + k] = s * apk + c * aqk;
        }
        if (want_vectors_)
            for (int k = 0; k < n_; ++k) {
                double vkp = v_[k * n_ + p], vkq = v_[k * n_ + q];
                v_[k * n_ + p] = c * vkp - s * vkq;
                v_[k * n_ + q] = s * vkp + c * vkq;
            }
    }

    double off_norm() const {
        double s = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j) s += a_[i * n_ + j] * a_[i * n_ + j];
        return std::sqrt(s);
    }

    void solve() {
        for (int sweep = 0; sweep < 100; ++sweep) {
            if (off_norm() < 1e-12) return;
            for (int p = 0; p < n_; ++p)
                for (int q = p + 1; q < n_; ++q) rotate(p, q);
        }
    }

    std::vector<double> a_;
    int n_;
    bool want_vectors_;
    std::vector<double> v_;
};

inline std::vector<double> dense_adjacency(const Graph& g) {
    int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) a[i * n + j] = 1.0;
    return a;
}

} // namespace detail

inline std::vector<std::pair<double, int>> group_values(const std::vector<double>& desc,
                                                        double tau = tol::group) {
    std::vector<std::pair<double, int>> groups;
    std::size_t i = 0;
    while (i < desc.size()) {
        std::size_t j = i + 1;
        while (j < desc.size() && desc[j - 1] - desc[j] < tau) ++j;
        double mean = std::accumulate(desc.begin() + i, desc.begin() + j, 0.0) /
                      static_cast<double>(j - i);
        groups.emplace_back(mean, static_cast<int>(j - i));
        i = j;
    }
    return groups;
}

inline Spectrum eigenvalues(const Graph& g) {
    detail::JacobiSolver solver(detail::dense_adjacency(g), g.order(), false);
    Spectrum s;
    s.values = solver.eigenvalues();
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    s.groups = group_values(s.values);
    return s;
}

/// Closed-form Spec(F_n): (1 +/- sqrt(8n+1))/2 once each, 1 with
/// multiplicity n-1, -1 with multiplicity n.
inline Spectrum friendship_spectrum(int n) {
    if (n < 1) throw std::invalid_argument("friendship_spectrum: n must be >= 1");
    double root = std::sqrt(8.0 * n + 1.0);
    Spectrum s;
    s.values.push_back((1.0 + root) / 2.0);
    for (int k = 0; k < n - 1; ++k) s.values.push_back(1.0);
    for (int k = 0; k < n; ++k) s.values.push_back(-1.0);
    s.values.push_back((1.0 - root) / 2.0);
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    s.groups = group_values(s.values);
    return s;
}

/// Cospectrality is decided on exact integer characteristic polynomials,
/// never on floating point spectra.
inline bool are_cospectral(const Graph& g, const Graph& h) {
    return char_poly(g) == char_poly(h);
}

/// Cauchy interlacing test: mu_j <= lambda_j + tau and
/// mu_j >= lambda_(j+n-m) - tau for all j (0-based).
inline bool interlaces(const Spectrum& sub, const Spectrum& sup, double tau = tol::eig) {
    std::size_t m = sub.values.size(), n = sup.values.size();
    if (m > n) throw std::invalid_argument("interlaces: subgraph order exceeds host order");
    for (std::size_t j = 0; j < m; ++j) {
        if (sub.values[j] > sup.values[j] + tau) return false;
        if (sub.values[j] < sup.values[j + n - m] - tau) return false;
    }
    return true;
}

inline double second_largest(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("second_largest: need at least 2 vertices");
    return eigenvalues(g).values[1];
}

/// Number of eigenvalues strictly below t (with the comparison margin tau_eig).
inline int count_eigs_below(const Graph& g, double t) {
    auto ev = eigenvalues(g).values;
    int c = 0;
    for (double v : ev) c += (v < t - tol::eig);
    return c;
}

/// tr(A^k) by repeated exact integer matrix products (k <= 10 keeps every
/// entry within 64 bits at n <= 64).
inline std::int64_t closed_walk_count(const Graph& g, int k) {
    if (k < 1 || k > 10) throw std::invalid_argument("closed_walk_count: k must be in 1..10");
    int n = g.order();
    std::vector<std::int64_t> pow(static_cast<std::size_t>(n) * n, 0), next(pow.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pow[i * n + j] = (i != j && g.has_edge(i, j)) ? 1 : 0;
    for (int step = 1; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = g.neighbors(i);
            while (row) {
                int t = std::countr_zero(row);
                row &= row - 1;
                for (int j = 0; j < n; ++j) next[i * n + j] += pow[t * n + j];
            }
        }
        std::swap(pow, next);
    }
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i) tr += pow[i * n + i];
    return tr;
}

/// Main angles: per distinct eigenvalue mu_i, beta_i is the norm of the
/// projection of the normalized all-ones vector onto the mu_i eigenspace.
struct MainAngles {
    std::vector<double> mu;    // distinct eigenvalues, descending
    std::vector<double> beta;  // matching angles, each in [0,1]
};

inline MainAngles main_angles(const Graph& g) {
    int n = g.order();
    detail::JacobiSolver solver(detail::dense_adjacency(g), n, true);
    auto ev = solver.eigenvalues();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ev[a] > ev[b]; });

    MainAngles ma;
    double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i + 1;
        while (j < idx.size() && ev[idx[j - 1]] - ev[idx[j]] < tol::group) ++j;
        double mean = 0, beta_sq = 0;
        for (std::size_t k = i; k < j; ++k) {
            mean += ev[idx[k]];
            double dot = 0;
            for (int comp = 0; comp < n; ++comp) dot += solver.vec(comp, idx[k]) * inv_sqrt_n;
            beta_sq += dot * dot;
        }
        ma.mu.push_back(mean / static_cast<double>(j - i));
        ma.beta.push_back(std::sqrt(beta_sq));
        i = j;
    }
    return ma;
}

// ---- real-coefficient polynomial helpers (constant term first) ----

inline std::vector<double> poly_to_double(const CharPoly& cp) {
    std::vector<double> r(cp.coeffs.size());
    for (std::size_t k = 0; k < cp.coeffs.size(); ++k)
        r[k] = static_cast<double>(cp.coeffs[k]);
    return r;
}

/// Roots of a real polynomial by Durand-Kerner iteration.
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg < 1) return {};
    std::vector<std::complex<double>> c(deg + 1);
    for (int k = 0; k <= deg; ++k) c[k] = coeffs[k] / coeffs[deg];
    std::vector<std::complex<double>> z(deg);
    std::complex<double> seed(0.4, 0.9), acc(1.0, 0.0);
    for (int k = 0; k < deg; ++k) {
        acc *= seed;
        z[k] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int k = deg; k >= 0; --k) v = v * x + c[k];
        return v;
    };
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (int k = 0; k < deg; ++k) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != k) denom *= z[k] - z[j];
            std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return z;
}

namespace detail {

inline double poly_eval(const std::vector<double>& c, double x) {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
    return d;
}

/// Refine a root of multiplicity m with the modified Newton step
/// r <- r - m p(r)/p'(r). The input comes from the eigensolver and is
/// already within ~1e-11 of the true root, so any larger step is noise
/// from evaluating 0/0 at a multiple root and must be rejected.
inline double polish_root(const std::vector<double>& p, const std::vector<double>& dp,
                          double r, int m) {
    for (int it = 0; it < 4; ++it) {
        double d = poly_eval(dp, r);
        if (d == 0.0) break;
        double step = m * poly_eval(p, r) / d;
        if (!std::isfinite(step) || std::abs(step) > 1e-6) break;
        r -= step;
    }
    return r;
}

/// Deflate one exact root: q = p / (x - root). Carries run from the leading
/// coefficient when |root| < 1 and from the constant term otherwise, so the
/// recurrence never amplifies.
inline std::vector<double> deflate(const std::vector<double>& p, double root) {
    int deg = static_cast<int>(p.size()) - 1;
    std::vector<double> q(deg);
    if (std::abs(root) < 1.0) {
        double carry = p[deg];
        for (int k = deg - 1; k >= 0; --k) {
            q[k] = carry;
            carry = p[k] + carry * root;
        }
    } else {
        double carry = -p[0] / root;
        q[0] = carry;
        for (int k = 1; k < deg; ++k) {
            carry = (carry - p[k]) / root;
            q[k] = carry;
        }
    }
    return q;
}

} // namespace detail

/// P_complement(x) = (-1)^n P_G(-x-1) (1 - n sum_i beta_i^2/(x+1+mu_i)),
/// evaluated as a real-coefficient polynomial. Each factor (x+1+mu_i)
/// divides R(x) = (-1)^n P_G(-x-1) exactly, so the sum terms come out of
/// polynomial deflation; the roots -(1+mu_i) are first polished against the
/// exact R to keep the deflation well conditioned.
inline std::vector<double> complement_char_poly_via_angles(const Graph& g) {
    int n = g.order();
    CharPoly pg = char_poly(g);
    // R(x) = (-1)^n P_G(-x-1), exactly over integers
    std::vector<BigInt> r(n + 1);
    std::vector<BigInt> pw{1};  // (x+1)^k as it grows
    for (int k = 0; k <= n; ++k) {
        BigInt factor = pg.coeffs[k] * ((k % 2 == 0) ? 1 : -1) * ((n % 2 == 0) ? 1 : -1);
        for (int j = 0; j <= k; ++j) r[j] += factor * pw[j];
        if (k < n) {
            pw.push_back(0);
            for (int j = k + 1; j > 0; --j) pw[j] += pw[j - 1];
        }
    }
    std::vector<double> rd(n + 1);
    for (int k = 0; k <= n; ++k) rd[k] = static_cast<double>(r[k]);
    std::vector<double> rdp = detail::poly_derivative(rd);

    auto ma = main_angles(g);
    auto spectrum = eigenvalues(g);
    std::vector<double> out = rd;
    for (std::size_t i = 0; i < ma.mu.size(); ++i) {
        int mult = spectrum.groups[i].second;
        double root = detail::polish_root(rd, rdp, -(1.0 + ma.mu[i]), mult);
        std::vector<double> q = detail::deflate(rd, root);
        double weight = static_cast<double>(n) * ma.beta[i] * ma.beta[i];
        for (int k = 0; k < n; ++k) out[k] -= weight * q[k];
    }
    return out;
}

/// Angle parameters of a graph cospectral with F_n: b at eigenvalue 1,
/// c at eigenvalue -1.
struct ComplementAngleParams {
    double b = 0;
    double c = 0;

    bool valid() const { return b >= 0 && c >= 0 && b + c <= 1 + tol::eig; }
};

/// The quartic whose roots, together with -2 and 0, give the complement
/// spectrum of any graph cospectral with F_n.
inline std::array<double, 5> complement_candidate_quartic(int n, const ComplementAngleParams& p) {
    if (n <= 2) throw std::invalid_argument("complement_candidate_quartic: n must be > 2");
    if (!p.valid()) throw std::invalid_argument("complement_candidate_quartic: invalid angle parameters");
    double b = p.b, c = p.c, nn = n;
    return {8 * c * nn * nn - 4 * c * nn - 4 * c,
            4 * b * nn * nn + 4 * c * nn * nn - 2 * c * nn + 2 * b * nn - 2 * c,
            4 - 4 * nn,
            4 - 2 * nn,
            1.0};
}

} // namespace cospec
