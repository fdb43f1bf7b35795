#pragma once

// Test-only helpers. The oracles here deliberately avoid the library's
// elimination code: plain rational Gaussian elimination and determinantal
// divisors taken over explicit minors.

#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace acyclo::testing {

inline std::vector<RationalVector> to_rational(const IntMatrix& a) {
    std::vector<RationalVector> m(a.rows(), RationalVector(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return m;
}

inline std::size_t rational_rank(const IntMatrix& a) {
    auto m = to_rational(a);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && m[p][c] == 0) ++p;
        if (p == a.rows()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline Rational rational_det(std::vector<RationalVector> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

inline Integer integer_det(const IntMatrix& a) { return rational_det(to_rational(a)).get_num(); }

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// gcd of all k x k minors (k-th determinantal divisor); 0 if all vanish.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
    Integer g = 0;
    if (k == 0) return 1;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
            std::vector<RationalVector> m(k, RationalVector(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rows[i], cols[j]);
            const Integer minor = rational_det(std::move(m)).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
            return g != 1;
        });
        return g != 1;
    });
    return g;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline std::vector<Simplex> rp2_triangles() {
    return {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
            {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}};
}

inline Hypergraph rp2_hypergraph() { return Hypergraph(6, 2, rp2_triangles()); }

/// Edge indices of the RP^2 triangles inside the complete K^(3)_6.
inline std::vector<std::size_t> rp2_in_complete(const Hypergraph& k36) {
    std::vector<std::size_t> out;
    for (const Simplex& t : rp2_triangles()) out.push_back(static_cast<std::size_t>(k36.find_edge(t)));
    return out;
}

/// Random connected graph on n vertices: a random spanning tree plus extra
/// random edges.
inline Hypergraph random_connected_graph(std::mt19937& rng, int n, std::size_t extra) {
    std::vector<Simplex> edges;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> parent(1, v - 1);
        edges.push_back({parent(rng), v});
    }
    std::uniform_int_distribution<int> vertex(1, n);
    for (std::size_t tries = 0; tries < 50 * (extra + 1) && edges.size() < static_cast<std::size_t>(n - 1) + extra;
         ++tries) {
        int a = vertex(rng), b = vertex(rng);
        if (a == b) continue;
        Simplex e{std::min(a, b), std::max(a, b)};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Hypergraph(n, 1, edges);
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace acyclo::testing
