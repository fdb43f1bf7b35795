#include "acyclo/feasibility.hpp"

#include "acyclo/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace acyclo {

bool LinearConstraint::satisfied_by(std::span<const Rational> x) const {
    Rational lhs = 0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) lhs += coefficients[i] * x[i];
    return kind == Kind::Equal ? lhs == rhs : lhs >= rhs;
}

namespace {

// a . z >= b with integer data, primitive over (a, b).
struct Inequality {
    IntVector a;
    Integer b;
};

Inequality normalize(std::span<const Rational> a, const Rational& b) {
    Integer lcm = b.get_den();
    for (const Rational& q : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    Inequality out{IntVector(a.size()), b.get_num() * (lcm / b.get_den())};
    Integer g = out.b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.a[i] = a[i].get_num() * (lcm / a[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.a[i].get_mpz_t());
    }
    if (g > 1) {
        for (Integer& x : out.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(out.b.get_mpz_t(), out.b.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

void make_primitive(Inequality& c) {
    Integer g = c.b;
    for (const Integer& x : c.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g <= 1) return;
    for (Integer& x : c.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.b.get_mpz_t(), c.b.get_mpz_t(), g.get_mpz_t());
}

struct FourierMotzkinBlowup {};

constexpr std::size_t kFourierMotzkinConstraintCap = 20000;

std::optional<RationalVector> solve_fourier_motzkin(std::size_t vars, std::vector<Inequality> system,
                                                    bool capped) {
    if (vars == 0) {
        for (const Inequality& c : system)
            if (c.b > 0) return std::nullopt;
        return RationalVector{};
    }
    // stages[j] holds the constraints that mention z_j when z_j is eliminated.
    std::vector<std::vector<Inequality>> stages(vars);
    for (std::size_t j = vars; j-- > 0;) {
        std::vector<Inequality> pos, neg;
        std::map<IntVector, Integer> next;  // coefficient row -> strongest rhs
        auto keep = [&](Inequality c) -> bool {
            make_primitive(c);
            if (std::all_of(c.a.begin(), c.a.end(), [](const Integer& x) { return x == 0; })) return c.b <= 0;
            auto [it, inserted] = next.try_emplace(std::move(c.a), c.b);
            if (!inserted && it->second < c.b) it->second = c.b;
            return true;
        };
        for (Inequality& c : system) {
            const int s = sgn(c.a[j]);
            if (s > 0)
                pos.push_back(std::move(c));
            else if (s < 0)
                neg.push_back(std::move(c));
            else if (!keep(std::move(c)))
                return std::nullopt;
        }
        for (const Inequality& p : pos)
            for (const Inequality& q : neg) {
                const Integer wp = -q.a[j];  // > 0
                const Integer wq = p.a[j];   // > 0
                Inequality c{IntVector(vars), wp * p.b + wq * q.b};
                for (std::size_t i = 0; i < j; ++i) c.a[i] = wp * p.a[i] + wq * q.a[i];
                if (!keep(std::move(c))) return std::nullopt;
            }
        if (capped && next.size() > kFourierMotzkinConstraintCap) throw FourierMotzkinBlowup{};
        stages[j] = std::move(pos);
        stages[j].insert(stages[j].end(), std::make_move_iterator(neg.begin()), std::make_move_iterator(neg.end()));
        system.clear();
        system.reserve(next.size());
        for (auto& [a, b] : next) system.push_back(Inequality{a, b});
    }

    RationalVector z(vars);
    for (std::size_t j = 0; j < vars; ++j) {
        std::optional<Rational> lower, upper;
        for (const Inequality& c : stages[j]) {
            Rational rest = Rational(c.b);
            for (std::size_t i = 0; i < j; ++i) rest -= Rational(c.a[i]) * z[i];
            const Rational bound = rest / Rational(c.a[j]);
            if (c.a[j] > 0) {
                if (!lower || bound > *lower) lower = bound;
            } else if (!upper || bound < *upper) {
                upper = bound;
            }
        }
        if (lower && upper && *lower > *upper) throw std::logic_error("fourier-motzkin: inconsistent back-substitution");
        z[j] = lower ? *lower : (upper ? *upper : Rational(0));
    }
    return z;
}

// Phase-one simplex over x = x_plus - x_minus with one surplus per row.
std::optional<RationalVector> solve_simplex(std::size_t vars, const std::vector<Inequality>& system) {
    const std::size_t m = system.size();
    if (m == 0) return RationalVector(vars);
    const std::size_t slack0 = 2 * vars;
    const std::size_t art0 = slack0 + m;

    // Row i:  a.x+ - a.x- - s_i = b_i, negated when b_i < 0 so s_i can start basic.
    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (system[i].b >= 0) artificial_rows.push_back(i);
    const std::size_t cols = art0 + artificial_rows.size();
    std::vector<RationalVector> t(m, RationalVector(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = system[i].b < 0;
        const int s = flip ? -1 : 1;
        for (std::size_t k = 0; k < vars; ++k) {
            t[i][k] = s * system[i].a[k];
            t[i][vars + k] = -s * system[i].a[k];
        }
        t[i][slack0 + i] = -s;
        t[i][cols] = s * system[i].b;
        if (flip) basis[i] = slack0 + i;
    }
    for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
        t[artificial_rows[k]][art0 + k] = 1;
        basis[artificial_rows[k]] = art0 + k;
    }

    // Reduced costs of the phase-one objective (sum of artificials).
    RationalVector cost(cols + 1);
    for (std::size_t i : artificial_rows)
        for (std::size_t c = 0; c <= cols; ++c)
            if (c < art0 || c == cols) cost[c] -= t[i][c];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) throw std::logic_error("simplex: phase one unbounded");
        const Rational inv = 1 / t[leave][enter];
        for (Rational& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t c = 0; c <= cols; ++c) t[i][c] -= f * t[leave][c];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t c = 0; c <= cols; ++c) cost[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }
    if (cost[cols] != 0) return std::nullopt;  // -(sum of artificials) at optimum

    RationalVector x(vars);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < vars)
            x[basis[i]] += t[i][cols];
        else if (basis[i] < slack0)
            x[basis[i] - vars] -= t[i][cols];
    }
    return x;
}

}  // namespace

std::optional<RationalVector> find_feasible_point(std::size_t variables, std::span<const LinearConstraint> constraints,
                                                  FeasibilitySolver solver) {
    std::vector<RationalVector> eq_rows;
    std::vector<const LinearConstraint*> inequalities;
    for (const LinearConstraint& c : constraints) {
        if (c.coefficients.size() != variables) throw DomainError("constraint has the wrong number of coefficients");
        if (c.kind == LinearConstraint::Kind::Equal) {
            RationalVector row = c.coefficients;
            row.push_back(c.rhs);
            eq_rows.push_back(std::move(row));
        } else {
            inequalities.push_back(&c);
        }
    }

    // Reduced row echelon form of the equalities.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < variables && r < eq_rows.size(); ++c) {
        std::size_t p = r;
        while (p < eq_rows.size() && eq_rows[p][c] == 0) ++p;
        if (p == eq_rows.size()) continue;
        std::swap(eq_rows[p], eq_rows[r]);
        const Rational inv = 1 / eq_rows[r][c];
        for (Rational& x : eq_rows[r]) x *= inv;
        for (std::size_t i = 0; i < eq_rows.size(); ++i) {
            if (i == r || eq_rows[i][c] == 0) continue;
            const Rational f = eq_rows[i][c];
            for (std::size_t k = 0; k <= variables; ++k) eq_rows[i][k] -= f * eq_rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < eq_rows.size(); ++i)
        if (eq_rows[i][variables] != 0) return std::nullopt;

    // x = base + sum_f z_f * direction_f over the free variables.
    std::vector<bool> is_pivot(variables, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_vars;
    for (std::size_t c = 0; c < variables; ++c)
        if (!is_pivot[c]) free_vars.push_back(c);
    RationalVector base(variables);
    for (std::size_t k = 0; k < pivots.size(); ++k) base[pivots[k]] = eq_rows[k][variables];
    std::vector<RationalVector> direction(free_vars.size(), RationalVector(variables));
    for (std::size_t f = 0; f < free_vars.size(); ++f) {
        direction[f][free_vars[f]] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) direction[f][pivots[k]] = -eq_rows[k][free_vars[f]];
    }

    const std::size_t nz = free_vars.size();
    std::vector<Inequality> reduced;
    reduced.reserve(inequalities.size());
    for (const LinearConstraint* c : inequalities) {
        RationalVector a(nz);
        Rational b = c->rhs;
        for (std::size_t i = 0; i < variables; ++i) b -= c->coefficients[i] * base[i];
        for (std::size_t f = 0; f < nz; ++f)
            for (std::size_t i = 0; i < variables; ++i) a[f] += c->coefficients[i] * direction[f][i];
        reduced.push_back(normalize(a, b));
    }

    std::optional<RationalVector> z;
    switch (solver) {
        case FeasibilitySolver::FourierMotzkin:
            z = solve_fourier_motzkin(nz, std::move(reduced), false);
            break;
        case FeasibilitySolver::Simplex:
            z = solve_simplex(nz, reduced);
            break;
        case FeasibilitySolver::Automatic:
            if (nz <= kMaxFourierMotzkinVars) {
                try {
                    z = solve_fourier_motzkin(nz, reduced, true);
                } catch (const FourierMotzkinBlowup&) {
                    z = solve_simplex(nz, reduced);
                }
            } else {
                z = solve_simplex(nz, reduced);
            }
            break;
    }
    if (!z) return std::nullopt;

    RationalVector x = base;
    for (std::size_t f = 0; f < nz; ++f)
        for (std::size_t i = 0; i < variables; ++i) x[i] += (*z)[f] * direction[f][i];
    for (const LinearConstraint& c : constraints)
        if (!c.satisfied_by(x)) throw std::logic_error("feasibility: solver returned a point violating a constraint");
    return x;
}

}  // namespace acyclo
