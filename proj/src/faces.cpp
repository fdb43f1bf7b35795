#include "acyclo/faces.hpp"

#include "acyclo/errors.hpp"
#include "acyclo/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace acyclo {

SignPattern::SignPattern(std::vector<std::int8_t> values) : values_(std::move(values)) {
    for (std::int8_t v : values_)
        if (v < -1 || v > 1) throw DomainError("sign pattern values must be -1, 0 or 1");
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<std::int8_t> values;
    values.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': values.push_back(1); break;
            case '-': values.push_back(-1); break;
            case '0': values.push_back(0); break;
            default: throw DomainError(std::string("bad sign character '") + c + "'");
        }
    }
    return SignPattern(std::move(values));
}

void SignPattern::set(std::size_t e, int sign) {
    if (sign < -1 || sign > 1) throw DomainError("sign must be -1, 0 or 1");
    values_.at(e) = static_cast<std::int8_t>(sign);
}

int SignPattern::value_on(const Hypergraph& h, std::span<const int> tuple) const {
    const std::ptrdiff_t e = h.find_edge(Simplex(tuple.begin(), tuple.end()));
    if (e < 0) throw DomainError("tuple is not an edge of the hypergraph");
    return values_.at(static_cast<std::size_t>(e)) * sort_sign(tuple);
}

bool SignPattern::is_proper() const noexcept {
    return std::none_of(values_.begin(), values_.end(), [](std::int8_t v) { return v == 0; });
}

std::size_t SignPattern::zero_count() const noexcept {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), std::int8_t{0}));
}

bool SignPattern::refines(const SignPattern& coarser) const {
    if (coarser.size() != size()) throw DomainError("sign patterns of different lengths");
    for (std::size_t e = 0; e < size(); ++e)
        if (coarser.values_[e] != 0 && coarser.values_[e] != values_[e]) return false;
    return true;
}

std::size_t SignPattern::hamming_distance(const SignPattern& other) const {
    if (other.size() != size()) throw DomainError("sign patterns of different lengths");
    std::size_t n = 0;
    for (std::size_t e = 0; e < size(); ++e) n += values_[e] != other.values_[e];
    return n;
}

SignPattern SignPattern::negated() const {
    SignPattern out = *this;
    for (std::int8_t& v : out.values_) v = static_cast<std::int8_t>(-v);
    return out;
}

std::string SignPattern::to_string() const {
    std::string s;
    s.reserve(values_.size());
    for (std::int8_t v : values_) s += v > 0 ? '+' : (v < 0 ? '-' : '0');
    return s;
}

PatternRealizer::PatternRealizer(const Hypergraph& h, FeasibilitySolver solver)
    : h_(&h), solver_(solver), boundary_(boundary_matrix(h)) {
    EchelonBasis rows(boundary_.cols());
    for (std::size_t r = 0; r < boundary_.rows(); ++r)
        if (rows.try_add(boundary_.row(r))) row_basis_.push_back(r);
    edge_forms_.assign(boundary_.cols(), RationalVector(row_basis_.size()));
    for (std::size_t e = 0; e < boundary_.cols(); ++e)
        for (std::size_t k = 0; k < row_basis_.size(); ++k) edge_forms_[e][k] = boundary_(row_basis_[k], e);
}

std::optional<PatternRealizer::Realization> PatternRealizer::realize(std::span<const std::int8_t> signs,
                                                                     std::size_t assigned) const {
    if (signs.size() != boundary_.cols() || assigned > signs.size())
        throw DomainError("sign pattern length does not match the edge count");
    std::vector<LinearConstraint> constraints;
    constraints.reserve(assigned);
    for (std::size_t e = 0; e < assigned; ++e) {
        LinearConstraint c;
        if (signs[e] == 0) {
            c.coefficients = edge_forms_[e];
            c.rhs = 0;
            c.kind = LinearConstraint::Kind::Equal;
        } else {
            c.coefficients = edge_forms_[e];
            if (signs[e] < 0)
                for (Rational& x : c.coefficients) x = -x;
            c.rhs = 1;
        }
        constraints.push_back(std::move(c));
    }
    const auto y = find_feasible_point(row_basis_.size(), constraints, solver_);
    if (!y) return std::nullopt;

    Realization out;
    out.gamma.assign(boundary_.rows(), Rational(0));
    for (std::size_t k = 0; k < row_basis_.size(); ++k) out.gamma[row_basis_[k]] = (*y)[k];
    out.alpha = coboundary_apply(*h_, out.gamma);
    for (std::size_t e = 0; e < assigned; ++e)
        if (sgn(out.alpha[e]) != signs[e]) throw std::logic_error("witness does not realize the requested signs");
    return out;
}

std::optional<PatternRealizer::Realization> PatternRealizer::realize(const SignPattern& sigma) const {
    return realize(sigma.values(), sigma.size());
}

std::size_t PatternRealizer::face_dimension(const SignPattern& sigma) const {
    std::vector<std::size_t> zeros;
    for (std::size_t e = 0; e < sigma.size(); ++e)
        if (sigma[e] == 0) zeros.push_back(e);
    return restricted_rank(boundary_, zeros);
}

IntVector PatternRealizer::vertex_point(const SignPattern& sigma) const {
    IntVector p(boundary_.rows());
    for (std::size_t e = 0; e < sigma.size(); ++e)
        if (sigma[e] > 0)
            for (std::size_t r = 0; r < boundary_.rows(); ++r) p[r] += boundary_(r, e);
    return p;
}

std::optional<RationalVector> validity_check(const Hypergraph& h, const SignPattern& sigma) {
    if (sigma.size() != h.edge_count()) throw DomainError("sign pattern length does not match the edge count");
    auto r = PatternRealizer(h).realize(sigma);
    if (!r) return std::nullopt;
    return std::move(r->gamma);
}

namespace {

Integer power_of(unsigned long base, std::size_t exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

// Depth-first search over sign assignments, reusing the parent's witness
// whenever it already has the sign being tried.
template <class Emit>
class SignWalker {
public:
    SignWalker(const PatternRealizer& realizer, std::vector<std::int8_t> choices, Shard shard, Emit emit)
        : realizer_(realizer),
          choices_(std::move(choices)),
          shard_(shard),
          shard_depth_(shard.prefix_depth()),
          edges_(realizer.boundary().cols()),
          signs_(edges_, 0),
          emit_(std::move(emit)) {}

    void run() {
        PatternRealizer::Realization root;
        root.gamma.assign(realizer_.boundary().rows(), Rational(0));
        root.alpha.assign(edges_, Rational(0));
        walk(0, 0, root);
    }

private:
    bool owned(std::size_t depth, std::uint64_t prefix) const {
        if (depth < shard_depth_) prefix <<= (shard_depth_ - depth);
        return shard_.owns(prefix);
    }

    void walk(std::size_t depth, std::uint64_t prefix, const PatternRealizer::Realization& current) {
        if (depth == shard_depth_ && !owned(depth, prefix)) return;
        if (depth == edges_) {
            if (owned(depth, prefix)) emit_(SignPattern(signs_), current);
            return;
        }
        for (std::size_t k = 0; k < choices_.size(); ++k) {
            const std::int8_t s = choices_[k];
            signs_[depth] = s;
            const std::uint64_t next = depth < shard_depth_ ? prefix * choices_.size() + k : prefix;
            if (sgn(current.alpha[depth]) == s) {
                walk(depth + 1, next, current);
            } else if (auto child = realizer_.realize(signs_, depth + 1)) {
                walk(depth + 1, next, *child);
            }
        }
        signs_[depth] = 0;
    }

    const PatternRealizer& realizer_;
    std::vector<std::int8_t> choices_;
    Shard shard_;
    std::size_t shard_depth_;
    std::size_t edges_;
    std::vector<std::int8_t> signs_;
    Emit emit_;
};

}  // namespace

std::vector<Vertex> enumerate_vertices(const Hypergraph& h, std::uint64_t budget, Shard shard) {
    shard.validate();
    check_budget(power_of(2, h.edge_count()), budget, "vertex enumeration");
    const PatternRealizer realizer(h);
    std::vector<Vertex> vertices;
    auto emit = [&](SignPattern sigma, const PatternRealizer::Realization& r) {
        IntVector point = realizer.vertex_point(sigma);
        vertices.push_back(Vertex{std::move(sigma), std::move(point), r.gamma});
    };
    SignWalker<decltype(emit)>(realizer, {1, -1}, shard, emit).run();
    return vertices;
}

bool vertex_adjacency(const Hypergraph& h, const SignPattern& a, const SignPattern& b) {
    for (const SignPattern* p : {&a, &b}) {
        if (p->size() != h.edge_count()) throw DomainError("sign pattern length does not match the edge count");
        if (!p->is_proper()) throw DomainError("pattern " + p->to_string() + " is not proper");
        if (!validity_check(h, *p)) throw DomainError("pattern " + p->to_string() + " is not valid");
    }
    return a.hamming_distance(b) == 1;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
    std::vector<std::size_t> f(polytope_dimension + 1, 0);
    for (const FaceDescriptor& face : faces) ++f.at(face.dimension);
    return f;
}

bool FaceLattice::contains(std::size_t outer, std::size_t inner) const {
    return faces.at(inner).pattern.refines(faces.at(outer).pattern);
}

std::vector<std::pair<std::size_t, std::size_t>> FaceLattice::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (faces[j].dimension == faces[i].dimension + 1 && contains(j, i)) out.emplace_back(i, j);
    return out;
}

std::optional<std::size_t> FaceLattice::find(const SignPattern& sigma) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].pattern == sigma) return i;
    return std::nullopt;
}

FaceLattice face_lattice(const Hypergraph& h, std::uint64_t budget) {
    check_budget(power_of(3, h.edge_count()), budget, "face lattice");
    const PatternRealizer realizer(h);
    FaceLattice lattice;
    lattice.polytope_dimension = rank(realizer.boundary());
    auto emit = [&](SignPattern sigma, const PatternRealizer::Realization& r) {
        const std::size_t dim = realizer.face_dimension(sigma);
        lattice.faces.push_back(FaceDescriptor{std::move(sigma), dim, r.gamma});
    };
    SignWalker<decltype(emit)>(realizer, {1, 0, -1}, Shard{}, emit).run();
    std::sort(lattice.faces.begin(), lattice.faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.pattern.to_string() < b.pattern.to_string();
    });
    return lattice;
}

std::vector<FaceDescriptor> facets(const Hypergraph& h, std::uint64_t budget) {
    FaceLattice lattice = face_lattice(h, budget);
    std::vector<FaceDescriptor> out;
    if (lattice.polytope_dimension == 0) return out;
    for (FaceDescriptor& f : lattice.faces)
        if (f.dimension + 1 == lattice.polytope_dimension) out.push_back(std::move(f));
    return out;
}

namespace {

SignPattern pattern_from_labels(const Hypergraph& complete, const std::vector<int>& part_of) {
    std::vector<std::int8_t> values(complete.edge_count(), 0);
    std::vector<int> labels;
    for (std::size_t e = 0; e < complete.edge_count(); ++e) {
        labels.clear();
        for (int v : complete.edge(e)) labels.push_back(part_of[static_cast<std::size_t>(v)]);
        values[e] = static_cast<std::int8_t>(sort_sign(labels));
    }
    return SignPattern(std::move(values));
}

}  // namespace

SignPattern partition_pattern(int n, int d, const std::vector<std::vector<int>>& parts) {
    const Hypergraph complete = complete_hypergraph(n, d);
    if (parts.size() != static_cast<std::size_t>(d) + 1)
        throw DomainError("partition must have exactly d+1 = " + std::to_string(d + 1) + " parts");
    std::vector<int> part_of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw DomainError("partition part " + std::to_string(p) + " is empty");
        for (int v : parts[p]) {
            if (v < 1 || v > n) throw DomainError("partition vertex " + std::to_string(v) + " out of range");
            if (part_of[static_cast<std::size_t>(v)] != -1)
                throw DomainError("vertex " + std::to_string(v) + " appears in two parts");
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (part_of[static_cast<std::size_t>(v)] == -1)
            throw DomainError("vertex " + std::to_string(v) + " is in no part");
    return pattern_from_labels(complete, part_of);
}

bool is_partition_induced(int n, int d, const SignPattern& sigma) {
    const Hypergraph complete = complete_hypergraph(n, d);
    if (sigma.size() != complete.edge_count()) throw DomainError("pattern is not on the complete hypergraph");
    const int parts = d + 1;
    if (power_of(static_cast<unsigned long>(parts), static_cast<std::size_t>(n)) > 50'000'000)
        throw DomainError("too many ordered partitions to scan");
    std::vector<int> part_of(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> used(static_cast<std::size_t>(parts));
    for (;;) {
        std::fill(used.begin(), used.end(), 0);
        for (int v = 1; v <= n; ++v) used[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])] = 1;
        if (std::all_of(used.begin(), used.end(), [](int u) { return u; }) &&
            pattern_from_labels(complete, part_of) == sigma)
            return true;
        int v = 1;
        while (v <= n && ++part_of[static_cast<std::size_t>(v)] == parts) part_of[static_cast<std::size_t>(v++)] = 0;
        if (v > n) return false;
    }
}

bool is_acyclic_hypertournament(const Hypertournament& t) {
    const Hypergraph complete = complete_hypergraph(t.n, t.d);
    if (t.orientation.size() != complete.edge_count())
        throw DomainError("hypertournament must orient all " + std::to_string(complete.edge_count()) + " edges");
    for (std::int8_t s : t.orientation)
        if (s != 1 && s != -1) throw DomainError("hypertournament orientations must be +1 or -1");
    return validity_check(complete, SignPattern(t.orientation)).has_value();
}

}  // namespace acyclo
