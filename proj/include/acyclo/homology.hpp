#pragma once

// Reduced homology of edge-subcomplexes of a hypergraph, in the two degrees
// that can be nonzero when the (d-1)-skeleton is full.

#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace acyclo {

/// A set of edges of a parent hypergraph, by edge index. The parent must
/// outlive the selection.
class SubcomplexSelection {
public:
    /// Throws DomainError on out-of-range or repeated indices. Indices are
    /// stored sorted.
    SubcomplexSelection(const Hypergraph& parent, std::vector<std::size_t> chosen_edges);

    const Hypergraph& parent() const noexcept { return *parent_; }
    const std::vector<std::size_t>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

private:
    const Hypergraph* parent_;
    std::vector<std::size_t> edges_;
};

/// Order of the torsion subgroup of the reduced (d-1)-homology over Z.
Integer torsion_order(const SubcomplexSelection& f);

/// True iff the boundaries of the chosen edges are linearly independent.
bool is_hyperforest(const SubcomplexSelection& f);

/// Hyperforest with cycle_space_dim(n, d) edges.
bool is_spanning_hypertree(const SubcomplexSelection& f);

/// Rational dimension of reduced homology in degree k; k must be d-1 or d.
std::size_t betti(const SubcomplexSelection& f, int k);

// Matrix-level forms of the above, for callers that already hold the
// boundary matrix of the parent (enumeration loops).
Integer restricted_torsion(const IntMatrix& boundary, std::span<const std::size_t> edges);
std::size_t restricted_rank(const IntMatrix& boundary, std::span<const std::size_t> edges);

}  // namespace acyclo
