#pragma once

// Spanning hyperforest and hypertree enumeration, and everything assembled
// from it: Ehrhart polynomials of hypergraphic zonotopes, their volumes and
// lattice-point counts, and the torsion census of spanning hypertrees.

#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acyclo {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// One slice of a prefix-partitioned enumeration. The search tree is split on
/// the first ceil(log2 total) include/exclude (or sign) decisions; the shard
/// with this index owns every prefix p with p % total == index.
struct Shard {
    std::size_t index = 0;
    std::size_t total = 1;

    /// Throws DomainError unless total >= 1 and index < total.
    void validate() const;
    std::size_t prefix_depth() const noexcept;
    bool owns(std::uint64_t prefix) const noexcept { return prefix % total == index; }
};

/// Throws BudgetExceeded when `bound` exceeds `budget`.
void check_budget(const Integer& bound, std::uint64_t budget, const char* what);

using SelectionVisitor = std::function<void(std::span<const std::size_t>)>;

struct EnumerationOptions {
    Shard shard;
    /// When set, only independent sets of exactly this size are visited, and
    /// branches that cannot reach it are cut.
    std::optional<std::size_t> exact_size;
};

/// Visits every set of edges with linearly independent boundaries exactly
/// once (sorted edge indices), by depth-first include/exclude over the edges
/// in index order, include first.
void enumerate_spanning_hyperforests(const Hypergraph& h, const SelectionVisitor& visit,
                                     const EnumerationOptions& options = {});

/// Coefficients indexed by degree. A full (unsharded) result has constant
/// term 1 and degree equal to the dimension of the zonotope.
class EhrhartPolynomial {
public:
    EhrhartPolynomial() = default;
    explicit EhrhartPolynomial(IntVector coefficients);

    const IntVector& coefficients() const noexcept { return coefficients_; }
    /// Coefficient of t^k (zero beyond the stored degree).
    Integer coefficient(std::size_t k) const;
    std::size_t degree() const noexcept;
    Integer evaluate(const Integer& t) const;

    EhrhartPolynomial& operator+=(const EhrhartPolynomial& other);
    bool operator==(const EhrhartPolynomial& other) const;

private:
    void trim();
    IntVector coefficients_;
};

struct CensusReport {
    Integer hypertree_count = 0;
    Integer weighted_volume = 0;  ///< sum of torsion orders
    Integer kalai_sum = 0;        ///< sum of squared torsion orders
    std::map<Integer, Integer> torsion_histogram;  ///< torsion order -> hypertrees

    void add_hypertree(const Integer& torsion);
    CensusReport& operator+=(const CensusReport& other);
    bool operator==(const CensusReport& other) const;
    /// Sums agree with the histogram.
    bool consistent() const;
};

EhrhartPolynomial ehrhart(const Hypergraph& h, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// Normalized volume in the cycle space (fundamental domain of the integer
/// cycle lattice has volume 1). Zero when H has no spanning hypertree.
Integer volume(const Hypergraph& h, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// Lattice points of the zonotope itself (Ehrhart polynomial at t = 1).
Integer lattice_point_count(const Hypergraph& h, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// Torsion census over the spanning hypertrees of h.
CensusReport hypertree_census(const Hypergraph& h, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// Census of the complete (d+1)-uniform hypergraph on n vertices. The guard
/// compares C(C(n, d+1), C(n-1, d)) against the budget.
CensusReport kalai_census(int n, int d, std::uint64_t budget = kDefaultBudget, Shard shard = {});

/// n^C(n-2, d), the closed form the census kalai_sum must match.
Integer kalai_formula(int n, int d);

/// Volumes of the acyclohedra for (n, d) and (n, n-d-2). Requires n >= d+3.
std::pair<Integer, Integer> duality_volume_check(int n, int d, std::uint64_t budget = kDefaultBudget);

/// Search-space sizes used by the budget guards.
Integer hypertree_search_bound(const Hypergraph& h);
Integer hyperforest_search_bound(const Hypergraph& h);

}  // namespace acyclo
