#include "acyclo/complex.hpp"

#include "acyclo/errors.hpp"

#include <algorithm>
#include <string>

namespace acyclo {

namespace {

void check_dims(int n, int d) {
    if (d < 1 || n < 2 || d > n - 1)
        throw DomainError("need 1 <= d <= n-1, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
}

template <class Scalar>
std::vector<Scalar> apply_coboundary(const Hypergraph& h, std::span<const Scalar> gamma) {
    const SimplexIndex rows(h.n(), h.d());
    if (gamma.size() != rows.size())
        throw DomainError("cochain has length " + std::to_string(gamma.size()) + ", expected " +
                          std::to_string(rows.size()));
    std::vector<Scalar> out(h.edge_count());
    Simplex face(static_cast<std::size_t>(h.d()));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Simplex& edge = h.edge(e);
        for (std::size_t omit = 0; omit < edge.size(); ++omit) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < edge.size(); ++i)
                if (i != omit) face[k++] = edge[i];
            const Scalar& g = gamma[rows.index_of(face)];
            if (omit % 2 == 0)
                out[e] += g;
            else
                out[e] -= g;
        }
    }
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int n, int d, std::vector<Simplex> edges) : n_(n), d_(d) {
    check_dims(n, d);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Simplex& e = edges[i];
        if (e.size() != static_cast<std::size_t>(d) + 1)
            throw DomainError("edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                              " vertices, expected " + std::to_string(d + 1));
        std::sort(e.begin(), e.end());
        if (e.front() < 1 || e.back() > n)
            throw DomainError("edge " + std::to_string(i) + " has a vertex outside 1.." + std::to_string(n));
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw DomainError("edge " + std::to_string(i) + " repeats a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        std::string s;
        for (int v : *dup) s += (s.empty() ? "" : ",") + std::to_string(v);
        throw DomainError("duplicate edge {" + s + "}");
    }
    edges_ = std::move(edges);
}

std::ptrdiff_t Hypergraph::find_edge(Simplex edge) const {
    std::sort(edge.begin(), edge.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
    if (it == edges_.end() || *it != edge) return -1;
    return it - edges_.begin();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SimplexIndex::SimplexIndex(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("SimplexIndex: need 0 <= k <= n");
    binom_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::size_t>(static_cast<std::size_t>(k) + 1));
    for (std::size_t a = 0; a <= static_cast<std::size_t>(n); ++a)
        for (std::size_t b = 0; b <= static_cast<std::size_t>(k); ++b) binom_[a][b] = binomial(a, b);
    count_ = binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::size_t SimplexIndex::index_of(std::span<const int> simplex) const {
    if (simplex.size() != static_cast<std::size_t>(k_)) throw DomainError("SimplexIndex: wrong subset size");
    std::size_t rank = 0;
    int prev = 0;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        const int v = simplex[i];
        if (v <= prev || v > n_) throw DomainError("SimplexIndex: subset not sorted or out of range");
        const std::size_t remaining = static_cast<std::size_t>(k_) - i - 1;
        for (int x = prev + 1; x < v; ++x) rank += binom_[static_cast<std::size_t>(n_ - x)][remaining];
        prev = v;
    }
    return rank;
}

Simplex SimplexIndex::simplex_at(std::size_t index) const {
    if (index >= count_) throw DomainError("SimplexIndex: index out of range");
    Simplex s;
    s.reserve(static_cast<std::size_t>(k_));
    int x = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i) {
        const std::size_t remaining = static_cast<std::size_t>(k_) - i - 1;
        for (;; ++x) {
            const std::size_t block = binom_[static_cast<std::size_t>(n_ - x)][remaining];
            if (index < block) break;
            index -= block;
        }
        s.push_back(x++);
    }
    return s;
}

Hypergraph complete_hypergraph(int n, int d) {
    check_dims(n, d);
    const SimplexIndex idx(n, d + 1);
    std::vector<Simplex> edges;
    edges.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) edges.push_back(idx.simplex_at(i));
    return Hypergraph(n, d, std::move(edges));
}

std::size_t cycle_space_dim(int n, int d) {
    check_dims(n, d);
    return binomial(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(d));
}

IntMatrix boundary_matrix(const Hypergraph& h) {
    const SimplexIndex rows(h.n(), h.d());
    IntMatrix m(rows.size(), h.edge_count());
    Simplex face(static_cast<std::size_t>(h.d()));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Simplex& edge = h.edge(e);
        for (std::size_t omit = 0; omit < edge.size(); ++omit) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < edge.size(); ++i)
                if (i != omit) face[k++] = edge[i];
            m(rows.index_of(face), e) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

int sort_sign(std::span<const int> tuple) {
    int sign = 1;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) return 0;
            if (tuple[i] > tuple[j]) sign = -sign;
        }
    return sign;
}

IntVector oriented_boundary(int n, std::span<const int> tuple) {
    if (tuple.size() < 2) throw DomainError("oriented_boundary: need at least two vertices");
    const int sign = sort_sign(tuple);
    if (sign == 0) throw DomainError("oriented_boundary: repeated vertex");
    Simplex sorted(tuple.begin(), tuple.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1 || sorted.back() > n) throw DomainError("oriented_boundary: vertex out of range");
    const SimplexIndex rows(n, static_cast<int>(tuple.size()) - 1);
    IntVector chain(rows.size());
    Simplex face(sorted.size() - 1);
    for (std::size_t omit = 0; omit < sorted.size(); ++omit) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (i != omit) face[k++] = sorted[i];
        chain[rows.index_of(face)] = ((omit % 2 == 0) ? 1 : -1) * sign;
    }
    return chain;
}

IntVector coboundary_apply(const Hypergraph& h, std::span<const Integer> gamma) {
    return apply_coboundary<Integer>(h, gamma);
}

RationalVector coboundary_apply(const Hypergraph& h, std::span<const Rational> gamma) {
    return apply_coboundary<Rational>(h, gamma);
}

}  // namespace acyclo
