#pragma once

// Exact rational feasibility for small linear systems of equalities and
// non-strict inequalities.

#include "acyclo/exactalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace acyclo {

struct LinearConstraint {
    enum class Kind { GreaterEqual, Equal };

    RationalVector coefficients;
    Rational rhs;
    Kind kind = Kind::GreaterEqual;

    /// coefficients . x >= rhs (or == rhs)
    bool satisfied_by(std::span<const Rational> x) const;
};

enum class FeasibilitySolver {
    Automatic,       ///< Fourier-Motzkin up to kMaxFourierMotzkinVars free variables, simplex above
    FourierMotzkin,  ///< Fourier-Motzkin regardless of size
    Simplex,         ///< phase-one simplex with Bland's rule
};

inline constexpr std::size_t kMaxFourierMotzkinVars = 12;

/// Returns a point satisfying every constraint, or nullopt if none exists.
/// Equalities are eliminated by exact Gaussian elimination before the
/// inequality solver runs.
std::optional<RationalVector> find_feasible_point(std::size_t variables, std::span<const LinearConstraint> constraints,
                                                  FeasibilitySolver solver = FeasibilitySolver::Automatic);

}  // namespace acyclo
