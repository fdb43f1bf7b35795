#pragma once

// Faces of hypergraphic zonotopes through sign patterns of coboundaries.
//
// A sign pattern assigns -1, 0 or +1 to every edge in its canonical
// (ascending) orientation. It is valid when some coboundary of a real
// (d-1)-cochain has exactly those signs; valid patterns ordered by
// refinement are the faces of the zonotope ordered by reverse inclusion.

#include "acyclo/census.hpp"
#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"
#include "acyclo/feasibility.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acyclo {

class SignPattern {
public:
    SignPattern() = default;
    /// Throws DomainError on values outside {-1, 0, 1}.
    explicit SignPattern(std::vector<std::int8_t> values);
    static SignPattern zeros(std::size_t edges) { return SignPattern(std::vector<std::int8_t>(edges, 0)); }
    /// Parses a string over {'+', '-', '0'}.
    static SignPattern parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t e) const { return values_.at(e); }
    void set(std::size_t e, int sign);
    const std::vector<std::int8_t>& values() const noexcept { return values_; }

    /// Value on an arbitrarily ordered vertex tuple of edge `e`: the canonical
    /// value times the sign of the permutation sorting the tuple.
    int value_on(const Hypergraph& h, std::span<const int> tuple) const;

    bool is_proper() const noexcept;
    std::size_t zero_count() const noexcept;
    /// True if this pattern agrees with `coarser` wherever `coarser` is nonzero.
    bool refines(const SignPattern& coarser) const;
    std::size_t hamming_distance(const SignPattern& other) const;
    SignPattern negated() const;
    /// "+0-" style rendering; also the canonical key.
    std::string to_string() const;

    auto operator<=>(const SignPattern&) const = default;

private:
    std::vector<std::int8_t> values_;
};

struct FaceDescriptor {
    SignPattern pattern;
    std::size_t dimension = 0;
    /// Cochain over the d-subsets of 1..n whose coboundary has the pattern's signs.
    RationalVector witness;
};

struct Vertex {
    SignPattern pattern;
    /// Sum of the boundary columns of the positively signed edges.
    IntVector point;
    RationalVector witness;
};

/// Decides realizability of sign patterns of one hypergraph. Constraints are
/// posed on the coefficients of a row basis of the boundary matrix, which
/// spans every coboundary; strict signs are homogenized to |alpha_e| >= 1.
class PatternRealizer {
public:
    explicit PatternRealizer(const Hypergraph& h, FeasibilitySolver solver = FeasibilitySolver::Automatic);

    const Hypergraph& hypergraph() const noexcept { return *h_; }
    const IntMatrix& boundary() const noexcept { return boundary_; }

    struct Realization {
        RationalVector gamma;  ///< cochain over the d-subsets of 1..n
        RationalVector alpha;  ///< its coboundary, one value per edge
    };

    /// Realizes signs[0..assigned) and leaves the remaining edges free.
    std::optional<Realization> realize(std::span<const std::int8_t> signs, std::size_t assigned) const;
    std::optional<Realization> realize(const SignPattern& sigma) const;

    /// Rank of the boundary columns of the zero-signed edges.
    std::size_t face_dimension(const SignPattern& sigma) const;
    IntVector vertex_point(const SignPattern& sigma) const;

private:
    const Hypergraph* h_;
    FeasibilitySolver solver_;
    IntMatrix boundary_;
    std::vector<std::size_t> row_basis_;
    std::vector<RationalVector> edge_forms_;  // per edge: coefficients over row_basis_
};

/// Witness cochain for a full pattern, or nullopt if the pattern is not valid.
std::optional<RationalVector> validity_check(const Hypergraph& h, const SignPattern& sigma);

/// Every valid proper pattern with its vertex, by depth-first search over the
/// edges (+ before -) with feasibility pruning. Guarded by 2^|E| <= budget.
std::vector<Vertex> enumerate_vertices(const Hypergraph& h, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// Adjacency of two vertices given by valid proper patterns.
/// Throws DomainError if either pattern is not valid and proper.
bool vertex_adjacency(const Hypergraph& h, const SignPattern& a, const SignPattern& b);

struct FaceLattice {
    std::vector<FaceDescriptor> faces;  ///< sorted by dimension, then pattern
    std::size_t polytope_dimension = 0;

    /// Face counts by dimension, 0..polytope_dimension.
    std::vector<std::size_t> f_vector() const;
    /// Face i is contained in face j (pattern i refines pattern j).
    bool contains(std::size_t outer, std::size_t inner) const;
    /// Covering pairs (inner, outer) with dimensions differing by one.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
    std::optional<std::size_t> find(const SignPattern& sigma) const;
};

/// All nonempty faces. Guarded by 3^|E| <= budget.
FaceLattice face_lattice(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

/// Faces of codimension one in the zonotope.
std::vector<FaceDescriptor> facets(const Hypergraph& h, std::uint64_t budget = kDefaultBudget);

/// Pattern of an ordered partition of 1..n into d+1 nonempty parts on the
/// complete hypergraph: on a transversal edge, the sign of the permutation
/// sorting its vertices by part index; zero elsewhere.
SignPattern partition_pattern(int n, int d, const std::vector<std::vector<int>>& parts);

/// True if sigma (on the complete hypergraph) equals partition_pattern for
/// some ordered partition.
bool is_partition_induced(int n, int d, const SignPattern& sigma);

struct Hypertournament {
    int n = 0;
    int d = 0;
    /// +1 / -1 per edge of the complete hypergraph, relative to ascending order.
    std::vector<std::int8_t> orientation;
};

/// Acyclic iff the open cone of the oriented edges misses every nonzero
/// d-cycle, iff the corresponding proper pattern is valid.
bool is_acyclic_hypertournament(const Hypertournament& t);

}  // namespace acyclo
