#include "acyclo/homology.hpp"

#include "acyclo/errors.hpp"

#include <algorithm>
#include <string>

namespace acyclo {

SubcomplexSelection::SubcomplexSelection(const Hypergraph& parent, std::vector<std::size_t> chosen_edges)
    : parent_(&parent), edges_(std::move(chosen_edges)) {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("selection repeats an edge index");
    if (!edges_.empty() && edges_.back() >= parent.edge_count())
        throw DomainError("selection edge index " + std::to_string(edges_.back()) + " out of range");
}

// The cycle group Z_{d-1} is the kernel of an integer matrix, hence saturated
// in C_{d-1}; the torsion of Z/B is therefore [sat(B) : B], computed against
// the full ambient row set.
Integer restricted_torsion(const IntMatrix& boundary, std::span<const std::size_t> edges) {
    if (edges.empty()) return 1;
    return saturation_index(boundary.select_columns(edges));
}

std::size_t restricted_rank(const IntMatrix& boundary, std::span<const std::size_t> edges) {
    if (edges.empty()) return 0;
    return rank(boundary.select_columns(edges));
}

Integer torsion_order(const SubcomplexSelection& f) {
    return restricted_torsion(boundary_matrix(f.parent()), f.edges());
}

bool is_hyperforest(const SubcomplexSelection& f) {
    return restricted_rank(boundary_matrix(f.parent()), f.edges()) == f.size();
}

bool is_spanning_hypertree(const SubcomplexSelection& f) {
    const Hypergraph& h = f.parent();
    return f.size() == cycle_space_dim(h.n(), h.d()) && is_hyperforest(f);
}

std::size_t betti(const SubcomplexSelection& f, int k) {
    const Hypergraph& h = f.parent();
    if (k != h.d() && k != h.d() - 1)
        throw DomainError("betti: unsupported degree " + std::to_string(k) + " (only " +
                          std::to_string(h.d() - 1) + " and " + std::to_string(h.d()) + ")");
    const std::size_t r = restricted_rank(boundary_matrix(h), f.edges());
    if (k == h.d()) return f.size() - r;
    return cycle_space_dim(h.n(), h.d()) - r;
}

}  // namespace acyclo
