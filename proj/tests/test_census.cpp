#include "acyclo/census.hpp"
#include "acyclo/errors.hpp"
#include "acyclo/homology.hpp"
#include "acyclo/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace acyclo;

namespace {

std::set<std::vector<std::size_t>> enumerate_all(const Hypergraph& h, const EnumerationOptions& options = {}) {
    std::set<std::vector<std::size_t>> seen;
    std::size_t visits = 0;
    enumerate_spanning_hyperforests(
        h, [&](std::span<const std::size_t> s) {
            seen.emplace(s.begin(), s.end());
            ++visits;
        },
        options);
    CHECK(visits == seen.size());
    return seen;
}

// Every subset whose boundary columns have full rational rank.
std::set<std::vector<std::size_t>> brute_force_forests(const Hypergraph& h) {
    const IntMatrix b = boundary_matrix(h);
    std::set<std::vector<std::size_t>> out;
    for (unsigned long mask = 0; mask < (1ul << h.edge_count()); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            if (mask >> i & 1ul) chosen.push_back(i);
        if (acyclo::testing::rational_rank(b.select_columns(chosen)) == chosen.size()) out.insert(chosen);
    }
    return out;
}

EhrhartPolynomial poly(std::initializer_list<long> c) {
    IntVector v;
    for (long x : c) v.emplace_back(x);
    return EhrhartPolynomial(v);
}

}  // namespace

TEST_CASE("hyperforest enumeration examples") {
    CHECK(enumerate_all(complete_hypergraph(4, 2)).size() == 15);
    CHECK(enumerate_all(complete_hypergraph(3, 1)).size() == 7);
    const auto empty = enumerate_all(Hypergraph(4, 2, {}));
    REQUIRE(empty.size() == 1);
    CHECK(empty.begin()->empty());
}

TEST_CASE("property: enumeration visits every independent set exactly once") {
    std::mt19937 rng(31);
    std::vector<Hypergraph> cases{complete_hypergraph(4, 2), complete_hypergraph(4, 1), complete_hypergraph(5, 1),
                                  complete_hypergraph(5, 3)};
    for (int i = 0; i < 5; ++i) cases.push_back(acyclo::testing::random_connected_graph(rng, 6, 4));
    const Hypergraph k52 = complete_hypergraph(5, 2);
    std::vector<Simplex> some(k52.edges().begin(), k52.edges().begin() + 8);
    cases.emplace_back(5, 2, some);
    for (const Hypergraph& h : cases) CHECK(enumerate_all(h) == brute_force_forests(h));
}

TEST_CASE("ehrhart polynomial examples") {
    CHECK(ehrhart(complete_hypergraph(3, 1)) == poly({1, 3, 3}));
    CHECK(ehrhart(complete_hypergraph(4, 2)) == poly({1, 4, 6, 4}));
    CHECK(ehrhart(Hypergraph(4, 2, {{1, 2, 3}})) == poly({1, 1}));
    const EhrhartPolynomial p = ehrhart(complete_hypergraph(4, 2));
    CHECK(p.degree() == 3);
    CHECK(p.evaluate(1) == 15);
    CHECK(p.evaluate(2) == 1 + 8 + 24 + 32);
    CHECK(p.coefficient(7) == 0);
}

TEST_CASE("volume examples") {
    CHECK(volume(complete_hypergraph(3, 1)) == 3);
    CHECK(volume(complete_hypergraph(4, 1)) == 16);
    CHECK(volume(complete_hypergraph(5, 1)) == 125);
    CHECK(volume(complete_hypergraph(4, 2)) == 4);
    CHECK(volume(Hypergraph(4, 2, {{1, 2, 3}, {1, 2, 4}})) == 0);
}

TEST_CASE("lattice point count examples") {
    CHECK(lattice_point_count(complete_hypergraph(3, 1)) == 7);
    CHECK(lattice_point_count(complete_hypergraph(4, 2)) == 15);
    CHECK(lattice_point_count(Hypergraph(5, 2, {{1, 4, 5}})) == 2);
}

TEST_CASE("kalai census examples") {
    const CensusReport r42 = kalai_census(4, 2);
    CHECK(r42.hypertree_count == 4);
    CHECK(r42.weighted_volume == 4);
    CHECK(r42.kalai_sum == 4);
    CHECK(r42.consistent());
    CHECK(kalai_census(5, 2).kalai_sum == 125);
    CHECK(kalai_census(5, 3).kalai_sum == 5);
    CHECK(kalai_census(6, 4).kalai_sum == 6);
    CHECK(kalai_formula(6, 2) == 46656);
    CHECK(kalai_formula(5, 1) == 125);
}

TEST_CASE("duality volume examples") {
    CHECK(duality_volume_check(5, 1) == std::pair<Integer, Integer>(125, 125));
    CHECK(duality_volume_check(5, 2) == std::pair<Integer, Integer>(125, 125));
    CHECK(duality_volume_check(4, 1) == std::pair<Integer, Integer>(16, 16));
    CHECK_THROWS_AS(duality_volume_check(4, 2), DomainError);
}

TEST_CASE("budget guard reports the bound") {
    try {
        kalai_census(6, 2, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.bound() == "184756");
    }
    CHECK_THROWS_AS(ehrhart(complete_hypergraph(6, 2), 1000), BudgetExceeded);
    CHECK_THROWS_AS(volume(complete_hypergraph(4, 2), 2), BudgetExceeded);
}

TEST_CASE("shard validation") {
    CHECK_THROWS_AS((Shard{2, 2}.validate()), DomainError);
    CHECK_THROWS_AS((Shard{0, 0}.validate()), DomainError);
    CHECK(Shard{0, 1}.prefix_depth() == 0);
    CHECK(Shard{0, 2}.prefix_depth() == 1);
    CHECK(Shard{0, 3}.prefix_depth() == 2);
    CHECK(Shard{0, 4}.prefix_depth() == 2);
    CHECK(Shard{0, 5}.prefix_depth() == 3);
}

TEST_CASE("property: shard merge equals the unsharded result on K^(3)_5") {
    const Hypergraph h = complete_hypergraph(5, 2);
    const CensusReport full = hypertree_census(h);
    const EhrhartPolynomial full_poly = ehrhart(h);
    for (std::size_t m = 1; m <= 6; ++m) {
        CensusReport merged;
        EhrhartPolynomial merged_poly;
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t i = 0; i < m; ++i) {
            const CensusReport part = hypertree_census(h, kDefaultBudget, Shard{i, m});
            CHECK(part.consistent());
            merged += part;
            merged_poly += ehrhart(h, kDefaultBudget, Shard{i, m});
            EnumerationOptions opts;
            opts.shard = Shard{i, m};
            for (const auto& s : enumerate_all(h, opts)) CHECK(seen.insert(s).second);
        }
        CHECK(merged == full);
        CHECK(merged_poly == full_poly);
        CHECK(seen == enumerate_all(h));
    }
}

TEST_CASE("property: volume three ways") {
    for (const Hypergraph& h : {complete_hypergraph(4, 2), complete_hypergraph(5, 2)}) {
        const EhrhartPolynomial p = ehrhart(h);
        const CensusReport c = hypertree_census(h);
        Integer by_hand = 0;
        acyclo::testing::for_each_subset(h.edge_count(), cycle_space_dim(h.n(), h.d()),
                                         [&](const std::vector<std::size_t>& s) {
                                             const SubcomplexSelection f(h, s);
                                             if (is_spanning_hypertree(f)) by_hand += torsion_order(f);
                                             return true;
                                         });
        CHECK(volume(h) == p.coefficient(cycle_space_dim(h.n(), h.d())));
        CHECK(volume(h) == c.weighted_volume);
        CHECK(volume(h) == by_hand);
    }
}

TEST_CASE("property: graph volumes match the matrix-tree count") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 5;
        const Hypergraph g = acyclo::testing::random_connected_graph(rng, n, static_cast<std::size_t>(trial % 6));
        CHECK(volume(g) == kirchhoff_tree_count(g));
    }
}

TEST_CASE("property: ehrhart values match direct lattice counts") {
    std::mt19937 rng(43);
    std::vector<Hypergraph> cases{complete_hypergraph(3, 1), Hypergraph(4, 1, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                                  complete_hypergraph(4, 2), Hypergraph(5, 2, {{1, 2, 3}, {2, 4, 5}, {1, 3, 5}, {3, 4, 5}})};
    cases.push_back(acyclo::testing::random_connected_graph(rng, 5, 2));
    for (const Hypergraph& h : cases) {
        REQUIRE(h.edge_count() <= 6);
        const EhrhartPolynomial p = ehrhart(h);
        for (unsigned long t = 1; t <= 2; ++t) CHECK(p.evaluate(t) == lattice_points_direct(h, t));
    }
}

TEST_CASE("property: census report invariants") {
    for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 4}, {5, 1}}) {
        const CensusReport r = kalai_census(n, d);
        CHECK(r.consistent());
        CHECK(r.weighted_volume >= r.hypertree_count);
        CHECK(r.kalai_sum >= r.weighted_volume);
        CHECK(r.kalai_sum == kalai_formula(n, d));
    }
    const EhrhartPolynomial p = ehrhart(complete_hypergraph(5, 2));
    CHECK(p.coefficient(0) == 1);
    CHECK(p.degree() <= cycle_space_dim(5, 2));
    for (const Integer& c : p.coefficients()) CHECK(c >= 0);
}
