#include "acyclo/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace acyclo {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
    IntMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Elimination state for the Smith form. The transforms are optional so the
// same code serves snf() and invariant_factors().
class SmithReducer {
public:
    SmithReducer(IntMatrix m, IntMatrix* left, IntMatrix* right)
        : m_(std::move(m)), left_(left), right_(right) {}

    IntVector run() {
        const std::size_t rows = m_.rows(), cols = m_.cols();
        const std::size_t diag = std::min(rows, cols);
        IntVector factors(diag);
        for (std::size_t t = 0; t < diag; ++t) {
            std::size_t pr, pc;
            if (!min_entry(t, pr, pc)) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            settle_pivot(t);
            if (m_(t, t) < 0) negate_row(t);
            factors[t] = m_(t, t);
        }
        return factors;
    }

private:
    // Smallest nonzero |entry| in the trailing block starting at (t, t).
    bool min_entry(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        for (std::size_t i = t; i < m_.rows(); ++i)
            for (std::size_t j = t; j < m_.cols(); ++j) {
                if (m_(i, j) == 0) continue;
                if (!found || mpz_cmpabs(m_(i, j).get_mpz_t(), m_(pr, pc).get_mpz_t()) < 0) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        return found;
    }

    void settle_pivot(std::size_t t) {
        const std::size_t rows = m_.rows(), cols = m_.cols();
        Integer q;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m_(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m_(i, t).get_mpz_t(), m_(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (m_(i, t) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t best = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (m_(i, t) != 0 && mpz_cmpabs(m_(i, t).get_mpz_t(), m_(best, t).get_mpz_t()) < 0) best = i;
                swap_rows(t, best);
                continue;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m_(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m_(t, j).get_mpz_t(), m_(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (m_(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t best = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m_(t, j) != 0 && mpz_cmpabs(m_(t, j).get_mpz_t(), m_(t, best).get_mpz_t()) < 0) best = j;
                swap_cols(t, best);
                continue;
            }
            // Pivot is isolated; enforce that it divides the trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(m_(i, j).get_mpz_t(), m_(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) return;
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m_.cols(); ++j) std::swap(m_(a, j), m_(b, j));
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j) std::swap((*left_)(a, j), (*left_)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m_.rows(); ++i) std::swap(m_(i, a), m_(i, b));
        if (right_)
            for (std::size_t i = 0; i < right_->rows(); ++i) std::swap((*right_)(i, a), (*right_)(i, b));
    }

    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < m_.cols(); ++j) m_(dst, j) += f * m_(src, j);
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j) (*left_)(dst, j) += f * (*left_)(src, j);
    }

    // col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < m_.rows(); ++i) m_(i, dst) += f * m_(i, src);
        if (right_)
            for (std::size_t i = 0; i < right_->rows(); ++i) (*right_)(i, dst) += f * (*right_)(i, src);
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < m_.cols(); ++j) m_(r, j) = -m_(r, j);
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j) (*left_)(r, j) = -(*left_)(r, j);
    }

    IntMatrix m_;
    IntMatrix* left_;
    IntMatrix* right_;
};

}  // namespace

SnfResult snf(const IntMatrix& a) {
    SnfResult result;
    result.left_transform = IntMatrix::identity(a.rows());
    result.right_transform = IntMatrix::identity(a.cols());
    SmithReducer reducer(a, &result.left_transform, &result.right_transform);
    result.invariant_factors = reducer.run();
    return result;
}

IntVector invariant_factors(const IntMatrix& a) {
    return SmithReducer(a, nullptr, nullptr).run();
}

std::size_t rank(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<IntVector> nullspace(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<RationalVector> m(rows, RationalVector(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols);
        x[f] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -m[k][f];
        basis.push_back(primitive_integer_vector(x));
    }
    return basis;
}

Integer saturation_index(const IntMatrix& a) {
    Integer index = 1;
    for (const Integer& f : invariant_factors(a))
        if (f != 0) index *= f;
    return index;
}

void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const Integer& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0) return;
    for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
    Integer lcm = 1;
    for (const Rational& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (lcm / v[i].get_den());
    make_primitive(out);
    auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
    if (first != out.end() && *first < 0)
        for (Integer& x : out) x = -x;
    return out;
}

IntVector EchelonBasis::reduce(std::span<const Integer> v) const {
    IntVector w(v.begin(), v.end());
    for (const Row& row : rows_) {
        if (w[row.pivot] == 0) continue;
        const Integer a = row.values[row.pivot];
        const Integer b = w[row.pivot];
        for (std::size_t i = 0; i < dim_; ++i) w[i] = a * w[i] - b * row.values[i];
        make_primitive(w);
    }
    return w;
}

bool EchelonBasis::is_independent(std::span<const Integer> v) const {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    IntVector w = reduce(v);
    return std::any_of(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
}

bool EchelonBasis::try_add(std::span<const Integer> v) {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    IntVector w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
    if (it == w.end()) return false;
    rows_.push_back(Row{static_cast<std::size_t>(it - w.begin()), std::move(w)});
    return true;
}

std::string to_decimal(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace acyclo
