#ifndef ACYCLO_ACYCLO_H
#define ACYCLO_ACYCLO_H

/*
 * C interface to the acyclo library.
 *
 * Every function returns an acyclo_status. On failure a description is
 * available from acyclo_last_error() on the calling thread until the next
 * call into the library. Arbitrary-precision integers cross the boundary as
 * decimal strings and rationals as "p/q" (or "p" when integral); such strings
 * are allocated by the library and released with acyclo_string_free().
 *
 * Enumerations take a shard (index, total); pass (0, 1) for a full run.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ACYCLO_BUILDING_LIBRARY)
#    define ACYCLO_API __declspec(dllexport)
#  else
#    define ACYCLO_API __declspec(dllimport)
#  endif
#else
#  define ACYCLO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acyclo_status {
    ACYCLO_OK = 0,
    ACYCLO_ERR_ARGUMENT = 1, /* null pointer, index out of range */
    ACYCLO_ERR_PARSE = 2,    /* malformed hypergraph document or pattern text */
    ACYCLO_ERR_BUDGET = 3,   /* enumeration bound above the budget */
    ACYCLO_ERR_DOMAIN = 4,   /* mathematically invalid input */
    ACYCLO_ERR_INTERNAL = 5
} acyclo_status;

#define ACYCLO_DEFAULT_BUDGET UINT64_C(10000000)

typedef struct acyclo_hypergraph acyclo_hypergraph;
typedef struct acyclo_polynomial acyclo_polynomial;
typedef struct acyclo_census acyclo_census;
typedef struct acyclo_face_list acyclo_face_list;
typedef struct acyclo_report acyclo_report;

ACYCLO_API const char* acyclo_version(void);
ACYCLO_API const char* acyclo_last_error(void);
ACYCLO_API void acyclo_string_free(char* s);

/* Hypergraphs */
ACYCLO_API acyclo_status acyclo_hypergraph_parse(const char* json, acyclo_hypergraph** out);
ACYCLO_API acyclo_status acyclo_hypergraph_complete(int n, int d, acyclo_hypergraph** out);
/* Edges given as a flat array of edge_count * (d+1) vertex labels. */
ACYCLO_API acyclo_status acyclo_hypergraph_create(int n, int d, const int* vertices, size_t edge_count,
                                                  acyclo_hypergraph** out);
ACYCLO_API void acyclo_hypergraph_free(acyclo_hypergraph* h);
ACYCLO_API int acyclo_hypergraph_n(const acyclo_hypergraph* h);
ACYCLO_API int acyclo_hypergraph_d(const acyclo_hypergraph* h);
ACYCLO_API size_t acyclo_hypergraph_edge_count(const acyclo_hypergraph* h);
/* Writes the d+1 ascending vertices of edge i into out. */
ACYCLO_API acyclo_status acyclo_hypergraph_edge(const acyclo_hypergraph* h, size_t i, int* out);
ACYCLO_API int acyclo_hypergraph_is_complete(const acyclo_hypergraph* h);
ACYCLO_API acyclo_status acyclo_hypergraph_to_json(const acyclo_hypergraph* h, char** out);
ACYCLO_API acyclo_status acyclo_cycle_space_dim(int n, int d, size_t* out);

/* Edge selections, by edge index */
ACYCLO_API acyclo_status acyclo_selection_torsion(const acyclo_hypergraph* h, const size_t* edges, size_t count,
                                                  char** out);
ACYCLO_API acyclo_status acyclo_selection_betti(const acyclo_hypergraph* h, const size_t* edges, size_t count, int k,
                                                size_t* out);
ACYCLO_API acyclo_status acyclo_selection_is_hyperforest(const acyclo_hypergraph* h, const size_t* edges,
                                                         size_t count, int* out);
ACYCLO_API acyclo_status acyclo_selection_is_spanning_hypertree(const acyclo_hypergraph* h, const size_t* edges,
                                                                size_t count, int* out);

/* Census */
ACYCLO_API acyclo_status acyclo_volume(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                       size_t shard_total, char** out);
ACYCLO_API acyclo_status acyclo_lattice_point_count(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                                    size_t shard_total, char** out);
ACYCLO_API acyclo_status acyclo_ehrhart(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                        size_t shard_total, acyclo_polynomial** out);
ACYCLO_API void acyclo_polynomial_free(acyclo_polynomial* p);
/* Number of stored coefficients (degree + 1; 0 for the zero polynomial). */
ACYCLO_API size_t acyclo_polynomial_length(const acyclo_polynomial* p);
ACYCLO_API acyclo_status acyclo_polynomial_coefficient(const acyclo_polynomial* p, size_t k, char** out);
ACYCLO_API acyclo_status acyclo_polynomial_evaluate(const acyclo_polynomial* p, uint64_t t, char** out);

ACYCLO_API acyclo_status acyclo_hypertree_census(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                                 size_t shard_total, acyclo_census** out);
ACYCLO_API acyclo_status acyclo_kalai_census(int n, int d, uint64_t budget, size_t shard_index, size_t shard_total,
                                             acyclo_census** out);
ACYCLO_API void acyclo_census_free(acyclo_census* c);
ACYCLO_API acyclo_status acyclo_census_hypertree_count(const acyclo_census* c, char** out);
ACYCLO_API acyclo_status acyclo_census_weighted_volume(const acyclo_census* c, char** out);
ACYCLO_API acyclo_status acyclo_census_kalai_sum(const acyclo_census* c, char** out);
ACYCLO_API size_t acyclo_census_histogram_size(const acyclo_census* c);
/* Entries in increasing torsion order. */
ACYCLO_API acyclo_status acyclo_census_histogram_entry(const acyclo_census* c, size_t i, char** order, char** count);
ACYCLO_API int acyclo_census_consistent(const acyclo_census* c);
/* In-place component-wise sum, for merging shards. */
ACYCLO_API acyclo_status acyclo_census_merge(acyclo_census* into, const acyclo_census* other);
ACYCLO_API acyclo_status acyclo_kalai_formula(int n, int d, char** out);
ACYCLO_API acyclo_status acyclo_duality_volumes(int n, int d, uint64_t budget, char** volume, char** dual_volume);

/* Faces. Patterns are strings over '+', '0', '-', one character per edge. */
ACYCLO_API acyclo_status acyclo_vertices(const acyclo_hypergraph* h, uint64_t budget, size_t shard_index,
                                         size_t shard_total, acyclo_face_list** out);
ACYCLO_API acyclo_status acyclo_face_lattice(const acyclo_hypergraph* h, uint64_t budget, acyclo_face_list** out);
ACYCLO_API acyclo_status acyclo_facets(const acyclo_hypergraph* h, uint64_t budget, acyclo_face_list** out);
/* A list with the single face of sigma, or an empty list if sigma is not valid. */
ACYCLO_API acyclo_status acyclo_validity_check(const acyclo_hypergraph* h, const char* pattern, acyclo_face_list** out);
ACYCLO_API acyclo_status acyclo_vertex_adjacency(const acyclo_hypergraph* h, const char* a, const char* b, int* out);
ACYCLO_API acyclo_status acyclo_is_partition_induced(int n, int d, const char* pattern, int* out);
/* orientation: one character '+' or '-' per edge of the complete hypergraph. */
ACYCLO_API acyclo_status acyclo_is_acyclic_hypertournament(int n, int d, const char* orientation, int* out);

ACYCLO_API void acyclo_face_list_free(acyclo_face_list* f);
ACYCLO_API size_t acyclo_face_list_size(const acyclo_face_list* f);
/* Dimension of the whole polytope (face lattices; 0 for other lists). */
ACYCLO_API size_t acyclo_face_list_polytope_dimension(const acyclo_face_list* f);
ACYCLO_API acyclo_status acyclo_face_pattern(const acyclo_face_list* f, size_t i, char** out);
ACYCLO_API acyclo_status acyclo_face_dimension(const acyclo_face_list* f, size_t i, size_t* out);
/* Vertex coordinates (vertex lists only; length 0 otherwise). */
ACYCLO_API size_t acyclo_face_point_length(const acyclo_face_list* f, size_t i);
ACYCLO_API acyclo_status acyclo_face_point_coordinate(const acyclo_face_list* f, size_t i, size_t k, char** out);
/* Witness cochain over the d-subsets of 1..n (length 0 when not recorded). */
ACYCLO_API size_t acyclo_face_witness_length(const acyclo_face_list* f, size_t i);
ACYCLO_API acyclo_status acyclo_face_witness_entry(const acyclo_face_list* f, size_t i, size_t k, char** out);

/* Oracles */
ACYCLO_API acyclo_status acyclo_oracle_kirchhoff(const acyclo_hypergraph* h, char** out);
ACYCLO_API acyclo_status acyclo_oracle_lattice_points(const acyclo_hypergraph* h, uint64_t t, size_t cap, char** out);
ACYCLO_API acyclo_status acyclo_oracle_ehrhart_fit(const acyclo_hypergraph* h, size_t cap, acyclo_report** out);
/* Valid proper patterns by exhaustive search, sorted by pattern. */
ACYCLO_API acyclo_status acyclo_oracle_signpatterns(const acyclo_hypergraph* h, size_t cap, acyclo_face_list** out);
ACYCLO_API acyclo_status acyclo_oracle_torsion(const acyclo_hypergraph* h, const size_t* edges, size_t count,
                                               char** out);
ACYCLO_API size_t acyclo_oracle_default_generator_cap(void);
ACYCLO_API size_t acyclo_oracle_default_bruteforce_cap(void);

ACYCLO_API void acyclo_report_free(acyclo_report* r);
ACYCLO_API const char* acyclo_report_quantity(const acyclo_report* r);
ACYCLO_API const char* acyclo_report_theorem_value(const acyclo_report* r);
ACYCLO_API const char* acyclo_report_oracle_value(const acyclo_report* r);
ACYCLO_API int acyclo_report_agreement(const acyclo_report* r);

#ifdef __cplusplus
}
#endif

#endif
