#include "acyclo/oracle.hpp"

#include "acyclo/census.hpp"
#include "acyclo/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace acyclo {

OracleReport make_report(std::string quantity, std::string theorem_value, std::string oracle_value) {
    const bool agree = theorem_value == oracle_value;
    return OracleReport{std::move(quantity), std::move(theorem_value), std::move(oracle_value), agree};
}

std::string format_coefficients(const IntVector& coefficients) {
    std::string s = "[";
    for (std::size_t i = 0; i < coefficients.size(); ++i) s += (i ? "," : "") + coefficients[i].get_str();
    return s + "]";
}

namespace {

// Boundary columns regenerated from scratch: faces are looked up in a map
// filled by recursive subset generation.
std::vector<std::vector<long>> generator_columns(const Hypergraph& h, std::span<const std::size_t> edges) {
    std::map<std::vector<int>, std::size_t> face_index;
    std::vector<int> current;
    std::function<void(int)> grow = [&](int next) {
        if (current.size() == static_cast<std::size_t>(h.d())) {
            face_index.emplace(current, face_index.size());
            return;
        }
        for (int v = next; v <= h.n(); ++v) {
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(1);

    std::vector<std::vector<long>> columns;
    for (std::size_t e : edges) {
        std::vector<long> col(face_index.size(), 0);
        const Simplex& edge = h.edge(e);
        long sign = 1;
        for (std::size_t omit = 0; omit < edge.size(); ++omit, sign = -sign) {
            std::vector<int> face;
            for (std::size_t i = 0; i < edge.size(); ++i)
                if (i != omit) face.push_back(edge[i]);
            col[face_index.at(face)] = sign;
        }
        columns.push_back(std::move(col));
    }
    return columns;
}

std::vector<std::vector<long>> all_generator_columns(const Hypergraph& h) {
    std::vector<std::size_t> all(h.edge_count());
    for (std::size_t e = 0; e < all.size(); ++e) all[e] = e;
    return generator_columns(h, all);
}

// Row-reduces `m` over Q in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational piv = m[r][c];
        for (Rational& x : m[r]) x /= piv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Solves the r x r system given by `rows` of the basis columns; used to
// test p = B_S x with x in [0, t].
struct BasisSolver {
    std::vector<std::size_t> basis;      // edge positions
    std::vector<std::size_t> rows;       // independent rows of B_S
    std::vector<RationalVector> inverse;  // (B_S restricted to rows)^-1
};

}  // namespace

Integer kirchhoff_tree_count(const Hypergraph& g) {
    if (g.d() != 1) throw DomainError("kirchhoff_tree_count needs a graph (d = 1)");
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<Integer>> lap(n, std::vector<Integer>(n));
    for (const Simplex& e : g.edges()) {
        const std::size_t a = static_cast<std::size_t>(e[0] - 1), b = static_cast<std::size_t>(e[1] - 1);
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    // Cofactor: drop the last row and column, then Bareiss.
    const std::size_t m = n - 1;
    if (m == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (lap[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < m && lap[p][k] == 0) ++p;
            if (p == m) return 0;
            std::swap(lap[p], lap[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) lap[i][j] = (lap[k][k] * lap[i][j] - lap[i][k] * lap[k][j]) / prev;
            lap[i][k] = 0;
        }
        prev = lap[k][k];
    }
    return sign * lap[m - 1][m - 1];
}

Integer lattice_points_direct(const Hypergraph& h, unsigned long t, std::size_t cap) {
    if (t == 0) throw DomainError("lattice_points_direct: dilation factor must be positive");
    if (h.edge_count() > cap)
        throw BudgetExceeded("lattice_points_direct: generator count " + std::to_string(h.edge_count()) +
                                 " exceeds cap " + std::to_string(cap),
                             std::to_string(h.edge_count()));
    const auto cols = all_generator_columns(h);
    const std::size_t edges = cols.size();
    const std::size_t dim = binomial(static_cast<std::size_t>(h.n()), static_cast<std::size_t>(h.d()));
    const long tt = static_cast<long>(t);

    // Row-reduced generators span the same space; a point of the span is
    // fixed by its pivot coordinates.
    std::vector<RationalVector> span_rows(edges, RationalVector(dim));
    for (std::size_t e = 0; e < edges; ++e)
        for (std::size_t i = 0; i < dim; ++i) span_rows[e][i] = cols[e][i];
    const std::vector<std::size_t> span_pivots = rref(span_rows, dim);
    const std::size_t rnk = span_pivots.size();
    std::vector<long> lo(dim, 0), hi(dim, 0);
    for (const auto& col : cols)
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] += tt * std::min(0L, col[i]);
            hi[i] += tt * std::max(0L, col[i]);
        }

    // Bases of the generator matrix and their inverses on independent rows.
    std::vector<BasisSolver> solvers;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (pick.size() == rnk) {
            std::vector<RationalVector> m(dim, RationalVector(rnk));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < rnk; ++k) m[i][k] = cols[pick[k]][i];
            std::vector<RationalVector> probe(rnk, RationalVector(dim));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t k = 0; k < rnk; ++k) probe[k][i] = m[i][k];
            std::vector<RationalVector> reduced = probe;
            const auto rows = rref(reduced, dim);
            if (rows.size() != rnk) return;
            // Invert the square block [m[rows[j]][k]] via Gauss-Jordan on [A | I].
            std::vector<RationalVector> aug(rnk, RationalVector(2 * rnk));
            for (std::size_t j = 0; j < rnk; ++j) {
                for (std::size_t k = 0; k < rnk; ++k) aug[j][k] = m[rows[j]][k];
                aug[j][rnk + j] = 1;
            }
            if (rref(aug, rnk).size() != rnk) throw std::logic_error("oracle: singular basis block");
            BasisSolver s{pick, rows, std::vector<RationalVector>(rnk, RationalVector(rnk))};
            for (std::size_t j = 0; j < rnk; ++j)
                for (std::size_t k = 0; k < rnk; ++k) s.inverse[j][k] = aug[j][rnk + k];
            solvers.push_back(std::move(s));
            return;
        }
        for (std::size_t e = from; e < edges; ++e) {
            pick.push_back(e);
            choose(e + 1);
            pick.pop_back();
        }
    };
    choose(0);

    auto member = [&](const std::vector<long>& p) {
        for (const BasisSolver& s : solvers) {
            std::vector<bool> in_basis(edges, false);
            for (std::size_t e : s.basis) in_basis[e] = true;
            std::vector<std::size_t> others;
            for (std::size_t e = 0; e < edges; ++e)
                if (!in_basis[e]) others.push_back(e);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
                std::vector<long> q = p;
                for (std::size_t k = 0; k < others.size(); ++k)
                    if (mask >> k & 1)
                        for (std::size_t i = 0; i < dim; ++i) q[i] -= tt * cols[others[k]][i];
                RationalVector x(rnk);
                for (std::size_t j = 0; j < rnk; ++j)
                    for (std::size_t k = 0; k < rnk; ++k) x[j] += s.inverse[j][k] * q[s.rows[k]];
                bool ok = true;
                for (std::size_t j = 0; j < rnk && ok; ++j) ok = x[j] >= 0 && x[j] <= tt;
                for (std::size_t i = 0; i < dim && ok; ++i) {
                    Rational lhs = 0;
                    for (std::size_t j = 0; j < rnk; ++j) lhs += x[j] * cols[s.basis[j]][i];
                    ok = lhs == q[i];
                }
                if (ok) return true;
            }
        }
        return rnk == 0 && std::all_of(p.begin(), p.end(), [](long v) { return v == 0; });
    };

    // Odometer over the pivot coordinates; the rest follow from the span.
    Integer count = 0;
    std::vector<long> free_values(rnk);
    for (std::size_t k = 0; k < rnk; ++k) free_values[k] = lo[span_pivots[k]];
    std::vector<long> p(dim);
    for (;;) {
        bool integral = true;
        for (std::size_t i = 0; i < dim && integral; ++i) {
            Rational v = 0;
            for (std::size_t k = 0; k < rnk; ++k) v += free_values[k] * span_rows[k][i];
            if (v.get_den() != 1 || v < lo[i] || v > hi[i]) integral = false;
            else p[i] = v.get_num().get_si();
        }
        if (integral && member(p)) count += 1;
        std::size_t k = 0;
        while (k < rnk && ++free_values[k] > hi[span_pivots[k]]) {
            free_values[k] = lo[span_pivots[k]];
            ++k;
        }
        if (k == rnk) break;
    }
    return count;
}

OracleReport ehrhart_fit_check(const Hypergraph& h, std::size_t cap) {
    const std::size_t degree = cycle_space_dim(h.n(), h.d());
    // Newton divided differences on t = 1 .. degree+1, then expansion.
    std::vector<Rational> xs, table;
    for (std::size_t t = 1; t <= degree + 1; ++t) {
        xs.emplace_back(static_cast<unsigned long>(t));
        table.emplace_back(lattice_points_direct(h, static_cast<unsigned long>(t), cap));
    }
    const std::size_t m = xs.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rational> poly(m, Rational(0));
    for (std::size_t i = m; i-- > 0;) {
        // poly = poly * (t - xs[i]) + table[i]
        std::vector<Rational> next(m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
            if (poly[k] == 0) continue;
            if (k + 1 < m) next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += table[i];
        poly = std::move(next);
    }
    std::string oracle_text = "[";
    std::size_t last = 0;
    for (std::size_t k = 0; k < m; ++k)
        if (poly[k] != 0) last = k;
    for (std::size_t k = 0; k <= last; ++k) oracle_text += (k ? "," : "") + poly[k].get_str();
    oracle_text += "]";
    return make_report("ehrhart", format_coefficients(ehrhart(h).coefficients()), oracle_text);
}

std::set<SignPattern> signpattern_bruteforce(const Hypergraph& h, std::size_t cap) {
    const std::size_t edges = h.edge_count();
    if (edges > cap)
        throw BudgetExceeded("signpattern_bruteforce: " + std::to_string(edges) + " edges exceeds cap " +
                                 std::to_string(cap),
                             std::to_string(edges));
    const PatternRealizer realizer(h);
    std::set<SignPattern> valid;
    std::vector<std::int8_t> values(edges);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        for (std::size_t e = 0; e < edges; ++e) values[e] = (mask >> e & 1) ? -1 : 1;
        SignPattern sigma(values);
        if (realizer.realize(sigma)) valid.insert(std::move(sigma));
    }
    return valid;
}

namespace {

using Grid = std::vector<IntVector>;  // row-major rows

// Column operations bringing `m` to column echelon form: the leading entries
// of successive columns sit in strictly increasing rows.
void column_echelon(Grid& m, std::size_t rows, std::size_t cols) {
    std::size_t pc = 0;
    Integer g, x, y;
    for (std::size_t i = 0; i < rows && pc < cols; ++i) {
        for (std::size_t c = pc + 1; c < cols; ++c) {
            if (m[i][c] == 0) continue;
            const Integer a = m[i][pc], b = m[i][c];
            if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
                // Plain elimination keeps the pivot column intact, otherwise
                // gcdext may swap equal-magnitude columns and the passes cycle.
                const Integer q = b / a;
                for (std::size_t r = 0; r < rows; ++r) m[r][c] -= q * m[r][pc];
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const Integer ag = a / g, bg = b / g;
            for (std::size_t r = 0; r < rows; ++r) {
                const Integer u = m[r][pc], v = m[r][c];
                m[r][pc] = x * u + y * v;
                m[r][c] = -bg * u + ag * v;
            }
        }
        if (m[i][pc] != 0) ++pc;
    }
}

Grid transpose_grid(const Grid& m, std::size_t rows, std::size_t cols) {
    Grid t(cols, IntVector(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

bool at_most_one_per_line(const Grid& m, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i)
        if (std::count_if(m[i].begin(), m[i].end(), [](const Integer& v) { return v != 0; }) > 1) return false;
    for (std::size_t j = 0; j < cols; ++j) {
        int nz = 0;
        for (std::size_t i = 0; i < rows; ++i) nz += m[i][j] != 0;
        if (nz > 1) return false;
    }
    return true;
}

}  // namespace

Integer torsion_rowreduce(const SubcomplexSelection& f) {
    if (f.size() == 0) return 1;
    const auto cols = generator_columns(f.parent(), f.edges());
    std::size_t rows = cols.front().size(), width = cols.size();
    Grid m(rows, IntVector(width));
    for (std::size_t j = 0; j < width; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];

    for (int pass = 0; !at_most_one_per_line(m, rows, width); ++pass) {
        if (pass > 10000) throw std::logic_error("torsion_rowreduce: reduction did not converge");
        column_echelon(m, rows, width);
        m = transpose_grid(m, rows, width);
        std::swap(rows, width);
        column_echelon(m, rows, width);
        m = transpose_grid(m, rows, width);
        std::swap(rows, width);
    }

    IntVector diagonal;
    for (const IntVector& row : m)
        for (const Integer& v : row)
            if (v != 0) diagonal.push_back(abs(v));
    // gcd sweep to a divisibility chain; the product is unchanged.
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            Integer g, l;
            mpz_gcd(g.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
            diagonal[i] = g;
            diagonal[j] = l;
        }
    Integer order = 1;
    for (const Integer& v : diagonal) order *= v;
    return order;
}

}  // namespace acyclo
