#include "acyclo/complex.hpp"
#include "acyclo/exactalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace acyclo;
using acyclo::testing::determinantal_divisor;
using acyclo::testing::integer_det;
using acyclo::testing::random_matrix;
using acyclo::testing::rational_rank;

namespace {

IntMatrix diag_of(const IntVector& d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

void check_snf(const IntMatrix& a) {
    const SnfResult r = snf(a);
    REQUIRE(r.invariant_factors.size() == std::min(a.rows(), a.cols()));
    CHECK(r.left_transform * a * r.right_transform == diag_of(r.invariant_factors, a.rows(), a.cols()));
    CHECK(abs(integer_det(r.left_transform)) == 1);
    CHECK(abs(integer_det(r.right_transform)) == 1);
    bool seen_zero = false;
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
        const Integer& f = r.invariant_factors[i];
        CHECK(f >= 0);
        if (f == 0) {
            seen_zero = true;
            continue;
        }
        CHECK_FALSE(seen_zero);
        if (i + 1 < r.invariant_factors.size() && r.invariant_factors[i + 1] != 0)
            CHECK(mpz_divisible_p(r.invariant_factors[i + 1].get_mpz_t(), f.get_mpz_t()));
    }
    CHECK(r.invariant_factors == invariant_factors(a));
}

}  // namespace

TEST_CASE("snf of small diagonal matrices") {
    CHECK(snf(IntMatrix::identity(2)).invariant_factors == IntVector{1, 1});
    CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).invariant_factors == IntVector{1, 6});
    CHECK(snf(IntMatrix{{0, 0}, {0, 0}, {0, 0}}).invariant_factors == IntVector{0, 0});
    check_snf(IntMatrix{{2, 0}, {0, 3}});
    check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
}

TEST_CASE("snf of the RP2 boundary matrix has a single factor 2") {
    const IntMatrix b = boundary_matrix(acyclo::testing::rp2_hypergraph());
    REQUIRE(b.rows() == 15);
    REQUIRE(b.cols() == 10);
    // Independent oracle: determinantal divisors from explicit minors.
    const Integer d9 = determinantal_divisor(b, 9);
    const Integer d10 = determinantal_divisor(b, 10);
    CHECK(d9 == 1);
    CHECK(d10 == 2);

    const SnfResult r = snf(b);
    IntVector expected(10, 1);
    expected.back() = 2;
    CHECK(r.invariant_factors == expected);
    CHECK(saturation_index(b) == 2);
    check_snf(b);
}

TEST_CASE("rank examples") {
    CHECK(rank(IntMatrix(3, 4)) == 0);
    CHECK(rank(boundary_matrix(complete_hypergraph(4, 2))) == 3);
    for (int n = 2; n <= 7; ++n) CHECK(rank(boundary_matrix(complete_hypergraph(n, 1))) == static_cast<std::size_t>(n - 1));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(IntMatrix::identity(3)).empty());
    // Columns are u1..u4 of K^(3)_4; the only relation is u1 - u2 + u3 - u4 = 0.
    const auto kernel = nullspace(boundary_matrix(complete_hypergraph(4, 2)));
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == IntVector{1, -1, 1, -1});
    const auto zero_kernel = nullspace(IntMatrix(3, 2));
    REQUIRE(zero_kernel.size() == 2);
    CHECK(zero_kernel[0] == IntVector{1, 0});
    CHECK(zero_kernel[1] == IntVector{0, 1});
}

TEST_CASE("saturation index examples") {
    CHECK(saturation_index(IntMatrix{{2, 1}, {1, 1}}) == 1);
    CHECK(saturation_index(IntMatrix::identity(4)) == 1);
    CHECK(saturation_index(IntMatrix{{2}, {0}}) == 2);
    CHECK(saturation_index(IntMatrix(2, 2)) == 1);
}

TEST_CASE("determinant agrees with rational elimination") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix a = random_matrix(rng, n, n);
        CHECK(determinant(a) == integer_det(a));
    }
}

TEST_CASE("property: snf reconstruction, divisibility and rank on random matrices") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        // Mix in low-rank products so zero factors and nontrivial torsion occur.
        IntMatrix a = random_matrix(rng, rows, cols);
        if (trial % 3 == 0) {
            const std::size_t inner = 1 + trial % 3;
            a = random_matrix(rng, rows, inner, -3, 3) * random_matrix(rng, inner, cols, -3, 3);
        }
        check_snf(a);
        const std::size_t r = rank(a);
        CHECK(r == rational_rank(a));
        const IntVector f = invariant_factors(a);
        CHECK(r == static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [](const Integer& x) { return x != 0; })));

        const auto kernel = nullspace(a);
        CHECK(kernel.size() == cols - r);
        for (const IntVector& v : kernel) {
            const IntVector av = a * v;
            CHECK(std::all_of(av.begin(), av.end(), [](const Integer& x) { return x == 0; }));
            IntVector copy = v;
            make_primitive(copy);
            CHECK(copy == v);
        }

        // Saturation index: invariant under column permutation and negation,
        // and equal to the r-th determinantal divisor.
        const Integer index = saturation_index(a);
        std::vector<std::size_t> perm(cols);
        for (std::size_t j = 0; j < cols; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix b = a.select_columns(perm);
        for (std::size_t i = 0; i < rows; ++i) b(i, 0) = -b(i, 0);
        CHECK(saturation_index(b) == index);
        if (rows * cols <= 30 && r > 0) CHECK(index == determinantal_divisor(a, r));
    }
}

TEST_CASE("echelon basis detects dependence") {
    EchelonBasis basis(3);
    CHECK(basis.try_add(IntVector{1, 2, 3}));
    CHECK(basis.try_add(IntVector{0, 1, 1}));
    CHECK_FALSE(basis.try_add(IntVector{2, 5, 7}));
    CHECK(basis.size() == 2);
    CHECK(basis.is_independent(IntVector{0, 0, 1}));
    CHECK_FALSE(basis.try_add(IntVector{0, 0, 0}));
    basis.pop_back();
    CHECK(basis.try_add(IntVector{2, 5, 7}));
}
