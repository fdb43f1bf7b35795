#include "acyclo/census.hpp"

#include "acyclo/errors.hpp"
#include "acyclo/homology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace acyclo {

void Shard::validate() const {
    if (total == 0 || index >= total)
        throw DomainError("invalid shard " + std::to_string(index) + "/" + std::to_string(total));
}

std::size_t Shard::prefix_depth() const noexcept {
    return total <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(total - 1));
}

void check_budget(const Integer& bound, std::uint64_t budget, const char* what) {
    if (bound > Integer(std::to_string(budget)))
        throw BudgetExceeded(std::string(what) + ": search space exceeds budget " + std::to_string(budget),
                             bound.get_str());
}

namespace {

Integer big_binomial(std::size_t n, std::size_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

class ForestWalker {
public:
    ForestWalker(const Hypergraph& h, const SelectionVisitor& visit, const EnumerationOptions& options)
        : visit_(visit),
          options_(options),
          edges_(h.edge_count()),
          shard_depth_(options.shard.prefix_depth()),
          basis_(SimplexIndex(h.n(), h.d()).size()) {
        const IntMatrix b = boundary_matrix(h);
        columns_.reserve(edges_);
        for (std::size_t e = 0; e < edges_; ++e) columns_.push_back(b.column(e));
        chosen_.reserve(edges_);
    }

    void run() { walk(0, 0); }

private:
    // Prefix of the first shard_depth_ decisions; undecided ones count as
    // exclusions.
    bool owned(std::size_t depth, std::uint64_t prefix) const {
        if (depth < shard_depth_) prefix <<= (shard_depth_ - depth);
        return options_.shard.owns(prefix);
    }

    void walk(std::size_t depth, std::uint64_t prefix) {
        if (depth == shard_depth_ && !owned(depth, prefix)) return;
        if (options_.exact_size) {
            const std::size_t target = *options_.exact_size;
            if (chosen_.size() == target) {
                if (owned(depth, prefix)) visit_(chosen_);
                return;
            }
            if (chosen_.size() + (edges_ - depth) < target) return;
        }
        if (depth == edges_) {
            if (owned(depth, prefix)) visit_(chosen_);
            return;
        }
        const bool in_prefix = depth < shard_depth_;
        if (basis_.try_add(columns_[depth])) {
            chosen_.push_back(depth);
            walk(depth + 1, in_prefix ? (prefix << 1) | 1 : prefix);
            chosen_.pop_back();
            basis_.pop_back();
        }
        walk(depth + 1, in_prefix ? prefix << 1 : prefix);
    }

    const SelectionVisitor& visit_;
    const EnumerationOptions& options_;
    std::size_t edges_;
    std::size_t shard_depth_;
    std::vector<IntVector> columns_;
    EchelonBasis basis_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

void enumerate_spanning_hyperforests(const Hypergraph& h, const SelectionVisitor& visit,
                                     const EnumerationOptions& options) {
    options.shard.validate();
    ForestWalker(h, visit, options).run();
}

EhrhartPolynomial::EhrhartPolynomial(IntVector coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void EhrhartPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer EhrhartPolynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Integer(0);
}

std::size_t EhrhartPolynomial::degree() const noexcept {
    return coefficients_.empty() ? 0 : coefficients_.size() - 1;
}

Integer EhrhartPolynomial::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

EhrhartPolynomial& EhrhartPolynomial::operator+=(const EhrhartPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
    for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
    trim();
    return *this;
}

bool EhrhartPolynomial::operator==(const EhrhartPolynomial& other) const {
    return coefficients_ == other.coefficients_;
}

void CensusReport::add_hypertree(const Integer& torsion) {
    hypertree_count += 1;
    weighted_volume += torsion;
    kalai_sum += torsion * torsion;
    torsion_histogram[torsion] += 1;
}

CensusReport& CensusReport::operator+=(const CensusReport& other) {
    hypertree_count += other.hypertree_count;
    weighted_volume += other.weighted_volume;
    kalai_sum += other.kalai_sum;
    for (const auto& [order, count] : other.torsion_histogram) torsion_histogram[order] += count;
    return *this;
}

bool CensusReport::operator==(const CensusReport& other) const {
    return hypertree_count == other.hypertree_count && weighted_volume == other.weighted_volume &&
           kalai_sum == other.kalai_sum && torsion_histogram == other.torsion_histogram;
}

bool CensusReport::consistent() const {
    Integer count = 0, linear = 0, squares = 0;
    for (const auto& [order, n] : torsion_histogram) {
        count += n;
        linear += order * n;
        squares += order * order * n;
    }
    return count == hypertree_count && linear == weighted_volume && squares == kalai_sum;
}

Integer hyperforest_search_bound(const Hypergraph& h) {
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, h.edge_count());
    return bound;
}

Integer hypertree_search_bound(const Hypergraph& h) {
    return big_binomial(h.edge_count(), cycle_space_dim(h.n(), h.d()));
}

EhrhartPolynomial ehrhart(const Hypergraph& h, std::uint64_t budget, Shard shard) {
    check_budget(hyperforest_search_bound(h), budget, "ehrhart");
    const IntMatrix b = boundary_matrix(h);
    IntVector coefficients(cycle_space_dim(h.n(), h.d()) + 1);
    enumerate_spanning_hyperforests(
        h, [&](std::span<const std::size_t> forest) { coefficients[forest.size()] += restricted_torsion(b, forest); },
        {shard, std::nullopt});
    return EhrhartPolynomial(std::move(coefficients));
}

CensusReport hypertree_census(const Hypergraph& h, std::uint64_t budget, Shard shard) {
    check_budget(hypertree_search_bound(h), budget, "hypertree census");
    const IntMatrix b = boundary_matrix(h);
    CensusReport report;
    enumerate_spanning_hyperforests(
        h, [&](std::span<const std::size_t> tree) { report.add_hypertree(restricted_torsion(b, tree)); },
        {shard, cycle_space_dim(h.n(), h.d())});
    return report;
}

Integer volume(const Hypergraph& h, std::uint64_t budget, Shard shard) {
    return hypertree_census(h, budget, shard).weighted_volume;
}

Integer lattice_point_count(const Hypergraph& h, std::uint64_t budget, Shard shard) {
    return ehrhart(h, budget, shard).evaluate(1);
}

CensusReport kalai_census(int n, int d, std::uint64_t budget, Shard shard) {
    return hypertree_census(complete_hypergraph(n, d), budget, shard);
}

Integer kalai_formula(int n, int d) {
    const std::size_t exponent = binomial(static_cast<std::size_t>(std::max(n - 2, 0)), static_cast<std::size_t>(d));
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), exponent);
    return r;
}

std::pair<Integer, Integer> duality_volume_check(int n, int d, std::uint64_t budget) {
    if (d < 1 || n < d + 3)
        throw DomainError("duality check needs n >= d+3, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
    const int dual = n - d - 2;
    return {volume(complete_hypergraph(n, d), budget), volume(complete_hypergraph(n, dual), budget)};
}

}  // namespace acyclo
