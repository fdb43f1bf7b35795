#include "acyclo/acyclo.h"

#include "acyclo/census.hpp"
#include "acyclo/complex.hpp"
#include "acyclo/errors.hpp"
#include "acyclo/faces.hpp"
#include "acyclo/homology.hpp"
#include "acyclo/hypergraph_io.hpp"
#include "acyclo/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace acyclo;

struct acyclo_hypergraph {
    Hypergraph value;
};

struct acyclo_polynomial {
    EhrhartPolynomial value;
};

struct acyclo_census {
    CensusReport value;
};

struct acyclo_face_list {
    struct Entry {
        std::string pattern;
        std::size_t dimension = 0;
        IntVector point;
        RationalVector witness;
    };
    std::vector<Entry> entries;
    std::size_t polytope_dimension = 0;
};

struct acyclo_report {
    OracleReport value;
};

namespace {

thread_local std::string last_error;

acyclo_status fail(acyclo_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
acyclo_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return ACYCLO_OK;
    } catch (const ParseError& e) {
        return fail(ACYCLO_ERR_PARSE, e.what());
    } catch (const BudgetExceeded& e) {
        return fail(ACYCLO_ERR_BUDGET, e.what());
    } catch (const DomainError& e) {
        return fail(ACYCLO_ERR_DOMAIN, e.what());
    } catch (const std::out_of_range& e) {
        return fail(ACYCLO_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ACYCLO_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ACYCLO_ERR_INTERNAL, e.what());
    }
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
    return ((ptrs == nullptr) || ...);
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SignPattern parse_pattern(const Hypergraph& h, const char* text) {
    SignPattern sigma;
    try {
        sigma = SignPattern::parse(text);
    } catch (const DomainError& e) {
        throw ParseError(std::string("pattern: ") + e.what());
    }
    if (sigma.size() != h.edge_count())
        throw ParseError("pattern: expected " + std::to_string(h.edge_count()) + " signs, got " +
                         std::to_string(sigma.size()));
    return sigma;
}

std::vector<std::size_t> selection_edges(const size_t* edges, size_t count) {
    if (count > 0 && edges == nullptr) throw std::out_of_range("selection: null edge array");
    return std::vector<std::size_t>(edges, edges + count);
}

Shard make_shard(size_t index, size_t total) {
    Shard s{index, total};
    s.validate();
    return s;
}

acyclo_face_list::Entry entry_of(const FaceDescriptor& f) {
    return {f.pattern.to_string(), f.dimension, {}, f.witness};
}

const acyclo_face_list::Entry* face_at(const acyclo_face_list* f, size_t i) {
    if (f == nullptr || i >= f->entries.size()) return nullptr;
    return &f->entries[i];
}

}  // namespace

extern "C" {

const char* acyclo_version(void) { return "0.1.0"; }

const char* acyclo_last_error(void) { return last_error.c_str(); }

void acyclo_string_free(char* s) { delete[] s; }

acyclo_status acyclo_hypergraph_parse(const char* json, acyclo_hypergraph** out) {
    if (any_null(json, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = new acyclo_hypergraph{parse_hypergraph(json)}; });
}

acyclo_status acyclo_hypergraph_complete(int n, int d, acyclo_hypergraph** out) {
    if (out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = new acyclo_hypergraph{complete_hypergraph(n, d)}; });
}

acyclo_status acyclo_hypergraph_create(int n, int d, const int* vertices, size_t edge_count,
                                       acyclo_hypergraph** out) {
    if (out == nullptr || (edge_count > 0 && vertices == nullptr)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (d < 1) throw DomainError("hypergraph: d must be at least 1");
        const std::size_t arity = static_cast<std::size_t>(d) + 1;
        std::vector<Simplex> edges;
        for (std::size_t e = 0; e < edge_count; ++e) edges.emplace_back(vertices + e * arity, vertices + (e + 1) * arity);
        *out = new acyclo_hypergraph{Hypergraph(n, d, std::move(edges))};
    });
}

void acyclo_hypergraph_free(acyclo_hypergraph* h) { delete h; }

int acyclo_hypergraph_n(const acyclo_hypergraph* h) { return h ? h->value.n() : 0; }

int acyclo_hypergraph_d(const acyclo_hypergraph* h) { return h ? h->value.d() : 0; }

size_t acyclo_hypergraph_edge_count(const acyclo_hypergraph* h) { return h ? h->value.edge_count() : 0; }

acyclo_status acyclo_hypergraph_edge(const acyclo_hypergraph* h, size_t i, int* out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const Simplex& e = h->value.edge(i);
        std::copy(e.begin(), e.end(), out);
    });
}

int acyclo_hypergraph_is_complete(const acyclo_hypergraph* h) {
    if (h == nullptr) return 0;
    return h->value.edge_count() == binomial(static_cast<std::size_t>(h->value.n()),
                                             static_cast<std::size_t>(h->value.d()) + 1);
}

acyclo_status acyclo_hypergraph_to_json(const acyclo_hypergraph* h, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(serialize_hypergraph(h->value)); });
}

acyclo_status acyclo_cycle_space_dim(int n, int d, size_t* out) {
    if (out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = cycle_space_dim(n, d); });
}

acyclo_status acyclo_selection_torsion(const acyclo_hypergraph* h, const size_t* edges, size_t count, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_string(torsion_order(SubcomplexSelection(h->value, selection_edges(edges, count))).get_str());
    });
}

acyclo_status acyclo_selection_betti(const acyclo_hypergraph* h, const size_t* edges, size_t count, int k,
                                     size_t* out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = betti(SubcomplexSelection(h->value, selection_edges(edges, count)), k); });
}

acyclo_status acyclo_selection_is_hyperforest(const acyclo_hypergraph* h, const size_t* edges, size_t count,
                                              int* out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = is_hyperforest(SubcomplexSelection(h->value, selection_edges(edges, count))); });
}

acyclo_status acyclo_selection_is_spanning_hypertree(const acyclo_hypergraph* h, const size_t* edges, size_t count,
                                                     int* out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = is_spanning_hypertree(SubcomplexSelection(h->value, selection_edges(edges, count))); });
}

acyclo_status acyclo_volume(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index, size_t shard_total,
                            char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = copy_string(volume(h->value, budget, make_shard(shard_index, shard_total)).get_str()); });
}

acyclo_status acyclo_lattice_point_count(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                         size_t shard_total, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_string(lattice_point_count(h->value, budget, make_shard(shard_index, shard_total)).get_str());
    });
}

acyclo_status acyclo_ehrhart(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index, size_t shard_total,
                             acyclo_polynomial** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = new acyclo_polynomial{ehrhart(h->value, budget, make_shard(shard_index, shard_total))}; });
}

void acyclo_polynomial_free(acyclo_polynomial* p) { delete p; }

size_t acyclo_polynomial_length(const acyclo_polynomial* p) { return p ? p->value.coefficients().size() : 0; }

acyclo_status acyclo_polynomial_coefficient(const acyclo_polynomial* p, size_t k, char** out) {
    if (any_null(p, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(p->value.coefficient(k).get_str()); });
}

acyclo_status acyclo_polynomial_evaluate(const acyclo_polynomial* p, uint64_t t, char** out) {
    if (any_null(p, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        Integer x;
        mpz_import(x.get_mpz_t(), 1, 1, sizeof t, 0, 0, &t);
        *out = copy_string(p->value.evaluate(x).get_str());
    });
}

acyclo_status acyclo_hypertree_census(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                      size_t shard_total, acyclo_census** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new acyclo_census{hypertree_census(h->value, budget, make_shard(shard_index, shard_total))};
    });
}

acyclo_status acyclo_kalai_census(int n, int d, uint64_t budget, size_t shard_index, size_t shard_total,
                                  acyclo_census** out) {
    if (out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = new acyclo_census{kalai_census(n, d, budget, make_shard(shard_index, shard_total))}; });
}

void acyclo_census_free(acyclo_census* c) { delete c; }

acyclo_status acyclo_census_hypertree_count(const acyclo_census* c, char** out) {
    if (any_null(c, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(c->value.hypertree_count.get_str()); });
}

acyclo_status acyclo_census_weighted_volume(const acyclo_census* c, char** out) {
    if (any_null(c, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(c->value.weighted_volume.get_str()); });
}

acyclo_status acyclo_census_kalai_sum(const acyclo_census* c, char** out) {
    if (any_null(c, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(c->value.kalai_sum.get_str()); });
}

size_t acyclo_census_histogram_size(const acyclo_census* c) { return c ? c->value.torsion_histogram.size() : 0; }

acyclo_status acyclo_census_histogram_entry(const acyclo_census* c, size_t i, char** order, char** count) {
    if (any_null(c, order, count)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    if (i >= c->value.torsion_histogram.size()) return fail(ACYCLO_ERR_ARGUMENT, "histogram index out of range");
    return guarded([&] {
        const auto it = std::next(c->value.torsion_histogram.begin(), static_cast<std::ptrdiff_t>(i));
        *order = copy_string(it->first.get_str());
        *count = copy_string(it->second.get_str());
    });
}

int acyclo_census_consistent(const acyclo_census* c) { return c ? c->value.consistent() : 0; }

acyclo_status acyclo_census_merge(acyclo_census* into, const acyclo_census* other) {
    if (any_null(into, other)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { into->value += other->value; });
}

acyclo_status acyclo_kalai_formula(int n, int d, char** out) {
    if (out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(kalai_formula(n, d).get_str()); });
}

acyclo_status acyclo_duality_volumes(int n, int d, uint64_t budget, char** volume_out, char** dual_out) {
    if (any_null(volume_out, dual_out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto [a, b] = duality_volume_check(n, d, budget);
        std::string sa = a.get_str(), sb = b.get_str();
        *volume_out = copy_string(sa);
        *dual_out = copy_string(sb);
    });
}

acyclo_status acyclo_vertices(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index, size_t shard_total,
                              acyclo_face_list** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto list = std::make_unique<acyclo_face_list>();
        for (Vertex& v : enumerate_vertices(h->value, budget, make_shard(shard_index, shard_total)))
            list->entries.push_back({v.pattern.to_string(), 0, std::move(v.point), std::move(v.witness)});
        *out = list.release();
    });
}

acyclo_status acyclo_face_lattice(const acyclo_hypergraph* h, uint64_t budget, acyclo_face_list** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const FaceLattice lattice = face_lattice(h->value, budget);
        auto list = std::make_unique<acyclo_face_list>();
        list->polytope_dimension = lattice.polytope_dimension;
        for (const FaceDescriptor& f : lattice.faces) list->entries.push_back(entry_of(f));
        *out = list.release();
    });
}

acyclo_status acyclo_facets(const acyclo_hypergraph* h, uint64_t budget, acyclo_face_list** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto list = std::make_unique<acyclo_face_list>();
        for (const FaceDescriptor& f : facets(h->value, budget)) list->entries.push_back(entry_of(f));
        list->polytope_dimension = list->entries.empty() ? 0 : list->entries.front().dimension + 1;
        *out = list.release();
    });
}

acyclo_status acyclo_validity_check(const acyclo_hypergraph* h, const char* pattern, acyclo_face_list** out) {
    if (any_null(h, pattern, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const SignPattern sigma = parse_pattern(h->value, pattern);
        const PatternRealizer realizer(h->value);
        auto list = std::make_unique<acyclo_face_list>();
        if (auto r = realizer.realize(sigma)) {
            IntVector point;
            if (sigma.is_proper()) point = realizer.vertex_point(sigma);
            list->entries.push_back({sigma.to_string(), realizer.face_dimension(sigma), std::move(point),
                                     std::move(r->gamma)});
        }
        *out = list.release();
    });
}

acyclo_status acyclo_vertex_adjacency(const acyclo_hypergraph* h, const char* a, const char* b, int* out) {
    if (any_null(h, a, b, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = vertex_adjacency(h->value, parse_pattern(h->value, a), parse_pattern(h->value, b)); });
}

acyclo_status acyclo_is_partition_induced(int n, int d, const char* pattern, int* out) {
    if (any_null(pattern, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const Hypergraph k = complete_hypergraph(n, d);
        *out = is_partition_induced(n, d, parse_pattern(k, pattern));
    });
}

acyclo_status acyclo_is_acyclic_hypertournament(int n, int d, const char* orientation, int* out) {
    if (any_null(orientation, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const Hypergraph k = complete_hypergraph(n, d);
        const SignPattern sigma = parse_pattern(k, orientation);
        if (!sigma.is_proper()) throw ParseError("orientation: every edge needs '+' or '-'");
        *out = is_acyclic_hypertournament(Hypertournament{n, d, sigma.values()});
    });
}

void acyclo_face_list_free(acyclo_face_list* f) { delete f; }

size_t acyclo_face_list_size(const acyclo_face_list* f) { return f ? f->entries.size() : 0; }

size_t acyclo_face_list_polytope_dimension(const acyclo_face_list* f) { return f ? f->polytope_dimension : 0; }

acyclo_status acyclo_face_pattern(const acyclo_face_list* f, size_t i, char** out) {
    const auto* e = face_at(f, i);
    if (e == nullptr || out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "face index out of range");
    return guarded([&] { *out = copy_string(e->pattern); });
}

acyclo_status acyclo_face_dimension(const acyclo_face_list* f, size_t i, size_t* out) {
    const auto* e = face_at(f, i);
    if (e == nullptr || out == nullptr) return fail(ACYCLO_ERR_ARGUMENT, "face index out of range");
    *out = e->dimension;
    return ACYCLO_OK;
}

size_t acyclo_face_point_length(const acyclo_face_list* f, size_t i) {
    const auto* e = face_at(f, i);
    return e ? e->point.size() : 0;
}

acyclo_status acyclo_face_point_coordinate(const acyclo_face_list* f, size_t i, size_t k, char** out) {
    const auto* e = face_at(f, i);
    if (e == nullptr || out == nullptr || k >= e->point.size())
        return fail(ACYCLO_ERR_ARGUMENT, "coordinate index out of range");
    return guarded([&] { *out = copy_string(e->point[k].get_str()); });
}

size_t acyclo_face_witness_length(const acyclo_face_list* f, size_t i) {
    const auto* e = face_at(f, i);
    return e ? e->witness.size() : 0;
}

acyclo_status acyclo_face_witness_entry(const acyclo_face_list* f, size_t i, size_t k, char** out) {
    const auto* e = face_at(f, i);
    if (e == nullptr || out == nullptr || k >= e->witness.size())
        return fail(ACYCLO_ERR_ARGUMENT, "witness index out of range");
    return guarded([&] { *out = copy_string(e->witness[k].get_str()); });
}

acyclo_status acyclo_oracle_kirchhoff(const acyclo_hypergraph* h, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(kirchhoff_tree_count(h->value).get_str()); });
}

acyclo_status acyclo_oracle_lattice_points(const acyclo_hypergraph* h, uint64_t t, size_t cap, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(lattice_points_direct(h->value, t, cap).get_str()); });
}

acyclo_status acyclo_oracle_ehrhart_fit(const acyclo_hypergraph* h, size_t cap, acyclo_report** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = new acyclo_report{ehrhart_fit_check(h->value, cap)}; });
}

acyclo_status acyclo_oracle_signpatterns(const acyclo_hypergraph* h, size_t cap, acyclo_face_list** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto list = std::make_unique<acyclo_face_list>();
        for (const SignPattern& s : signpattern_bruteforce(h->value, cap)) list->entries.push_back({s.to_string(), 0, {}, {}});
        *out = list.release();
    });
}

acyclo_status acyclo_oracle_torsion(const acyclo_hypergraph* h, const size_t* edges, size_t count, char** out) {
    if (any_null(h, out)) return fail(ACYCLO_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = copy_string(torsion_rowreduce(SubcomplexSelection(h->value, selection_edges(edges, count))).get_str());
    });
}

size_t acyclo_oracle_default_generator_cap(void) { return kDefaultOracleGeneratorCap; }

size_t acyclo_oracle_default_bruteforce_cap(void) { return kDefaultBruteforceEdgeCap; }

void acyclo_report_free(acyclo_report* r) { delete r; }

const char* acyclo_report_quantity(const acyclo_report* r) { return r ? r->value.quantity.c_str() : ""; }

const char* acyclo_report_theorem_value(const acyclo_report* r) { return r ? r->value.theorem_value.c_str() : ""; }

const char* acyclo_report_oracle_value(const acyclo_report* r) { return r ? r->value.oracle_value.c_str() : ""; }

int acyclo_report_agreement(const acyclo_report* r) { return r ? r->value.agreement : 0; }

}  // extern "C"
