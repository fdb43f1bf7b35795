#pragma once

// Brute-force cross-checks. Everything here recomputes its quantity by a
// different algorithm from the census/homology/faces code: boundary columns
// are regenerated locally and no elimination routine is shared.

#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"
#include "acyclo/faces.hpp"
#include "acyclo/homology.hpp"

#include <cstddef>
#include <set>
#include <string>

namespace acyclo {

struct OracleReport {
    std::string quantity;
    std::string theorem_value;
    std::string oracle_value;
    bool agreement = false;
};

OracleReport make_report(std::string quantity, std::string theorem_value, std::string oracle_value);

inline constexpr std::size_t kDefaultOracleGeneratorCap = 8;
inline constexpr std::size_t kDefaultBruteforceEdgeCap = 12;

/// Spanning-tree count of a graph (d == 1) as a Laplacian cofactor.
Integer kirchhoff_tree_count(const Hypergraph& g);

/// Lattice points of t * Z_H found by scanning the integer points of the
/// column span inside a bounding box and testing membership by exact
/// basic-solution search. Throws BudgetExceeded above `cap` generators.
Integer lattice_points_direct(const Hypergraph& h, unsigned long t, std::size_t cap = kDefaultOracleGeneratorCap);

/// Interpolates the direct counts at t = 1 .. cycle_space_dim + 1 and
/// compares every coefficient against census ehrhart().
OracleReport ehrhart_fit_check(const Hypergraph& h, std::size_t cap = kDefaultOracleGeneratorCap);

/// Every valid proper pattern, found by testing all 2^|E| proper patterns.
std::set<SignPattern> signpattern_bruteforce(const Hypergraph& h, std::size_t cap = kDefaultBruteforceEdgeCap);

/// Torsion of the reduced (d-1)-homology by alternating column and row
/// Hermite reductions down to a diagonal, then a gcd sweep.
Integer torsion_rowreduce(const SubcomplexSelection& f);

/// Formats coefficients as "[c0,c1,...]".
std::string format_coefficients(const IntVector& coefficients);

}  // namespace acyclo
