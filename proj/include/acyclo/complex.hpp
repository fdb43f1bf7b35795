#pragma once

// Uniform hypergraphs viewed as simplicial complexes with a full
// (d-1)-skeleton, together with their boundary and coboundary maps.
//
// Orientation convention: every simplex is stored with its vertices in
// ascending order, and that ordering is its positive orientation.

#include "acyclo/exactalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace acyclo {

using Simplex = std::vector<int>;  // 1-based vertex labels, ascending

/// A (d+1)-uniform hypergraph on vertices 1..n. Edges are kept sorted
/// internally and the edge list is kept in lexicographic order, so edge
/// indices are canonical.
class Hypergraph {
public:
    /// Throws DomainError unless 1 <= d <= n-1 and every edge is a set of
    /// d+1 distinct vertices in 1..n with no repeats. Edge vertex order on
    /// input is irrelevant.
    Hypergraph(int n, int d, std::vector<Simplex> edges);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Simplex>& edges() const noexcept { return edges_; }
    const Simplex& edge(std::size_t i) const { return edges_.at(i); }

    /// Position of `edge` (any vertex order) in the edge list, or -1.
    std::ptrdiff_t find_edge(Simplex edge) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_;
    int d_;
    std::vector<Simplex> edges_;
};

/// Lexicographic numbering of the k-element subsets of 1..n.
class SimplexIndex {
public:
    SimplexIndex(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return count_; }

    /// Position of a sorted k-subset.
    std::size_t index_of(std::span<const int> simplex) const;
    Simplex simplex_at(std::size_t index) const;

private:
    int n_;
    int k_;
    std::size_t count_;
    std::vector<std::vector<std::size_t>> binom_;  // binom_[a][b] = C(a, b)
};

std::size_t binomial(std::size_t n, std::size_t k);

/// The complete (d+1)-uniform hypergraph on n vertices.
Hypergraph complete_hypergraph(int n, int d);

/// C(n-1, d): the dimension of the (d-1)-cycle space of any (d+1)-uniform
/// hypergraph on n vertices, and the edge count of its spanning hypertrees.
std::size_t cycle_space_dim(int n, int d);

/// Matrix of the boundary map from d-chains to (d-1)-chains: one row per
/// d-subset of 1..n (lexicographic, all of them), one column per edge.
IntMatrix boundary_matrix(const Hypergraph& h);

/// Boundary of a single oriented simplex given as an arbitrary vertex tuple,
/// as a chain over the (size-1)-subsets of 1..n. Reordering the tuple by a
/// permutation multiplies the result by the sign of that permutation.
IntVector oriented_boundary(int n, std::span<const int> tuple);

/// Coboundary of a (d-1)-cochain, evaluated on each canonical edge:
/// transpose(boundary_matrix(h)) * gamma.
IntVector coboundary_apply(const Hypergraph& h, std::span<const Integer> gamma);
RationalVector coboundary_apply(const Hypergraph& h, std::span<const Rational> gamma);

/// Sign of the permutation that sorts `tuple` ascending; 0 on repeated entries.
int sort_sign(std::span<const int> tuple);

}  // namespace acyclo
