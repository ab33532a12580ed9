/* atomfiber: exact computation of atomic fibers of integer matrices.
 *
 * C interface to the shared library. Every function that can fail returns a
 * status code (AF_OK on success); af_last_error() describes the most recent
 * failure on the calling thread. Returned text buffers are heap-allocated
 * decimal/ASCII strings; release them with af_text_free. Handles are opaque
 * and must be released with their matching *_free function.
 *
 * Vectors and matrices use arbitrary-precision integers, so scalar values
 * cross this interface as whitespace-separated decimal strings.
 */

#ifndef ATOMFIBER_H
#define ATOMFIBER_H

#ifdef __cplusplus
extern "C" {
#endif

#define AF_OK 0
#define AF_ERR_PARSE 2
#define AF_ERR_LIMIT 3
#define AF_ERR_INFEASIBLE 4
#define AF_ERR_INCOMPLETE_ATOMS 5
#define AF_ERR_DIM 6
#define AF_ERR_INVALID 7
#define AF_ERR_UNBOUNDED 8
#define AF_ERR_IO 9
#define AF_ERR_INTERNAL 10
#define AF_ERR_INFEASIBLE_SEED 11

typedef struct af_matrix af_matrix;           /* matrix plus its query caches */
typedef struct af_vector_list af_vector_list; /* ordered list of integer vectors */
typedef struct af_decomposition af_decomposition;
typedef struct af_solution af_solution;

typedef struct af_options {
  int threads;       /* worker threads for completions and filters; >= 1 */
  int deterministic; /* nonzero: keep internal reduction order canonical */
  long long limit;   /* completion element budget before AF_ERR_LIMIT */
  long long cache_cap; /* max memoized fiber minimal-sets, 0 = unlimited */
} af_options;

void af_options_init(af_options* opt);

/* Most recent error message of the calling thread; never NULL. */
const char* af_last_error(void);

void af_text_free(char* text);

/* --- matrices ------------------------------------------------------- */

int af_matrix_parse(const char* text, const af_options* opt, af_matrix** out);
int af_matrix_read(const char* path, const af_options* opt, af_matrix** out);
void af_matrix_free(af_matrix* m);
long long af_matrix_rows(const af_matrix* m);
long long af_matrix_cols(const af_matrix* m);
int af_matrix_format(const af_matrix* m, char** out_text);

/* --- vector lists ---------------------------------------------------- */

int af_vector_list_parse(const char* text, af_vector_list** out);
int af_vector_list_read(const char* path, af_vector_list** out);
void af_vector_list_free(af_vector_list* l);
long long af_vector_list_size(const af_vector_list* l);
long long af_vector_list_dim(const af_vector_list* l);
int af_vector_list_row(const af_vector_list* l, long long index, char** out_text);
int af_vector_list_format(const af_vector_list* l, char** out_text);
int af_vector_list_write(const af_vector_list* l, const char* path);

/* --- kernel bases ----------------------------------------------------- */

int af_graver_basis(af_matrix* m, af_vector_list** out);
int af_hilbert_basis(af_matrix* m, af_vector_list** out);

/* --- fibers ----------------------------------------------------------- */

/* Conformally minimal elements of {z : m z = rhs, z_i >= 0 for i < mode}.
 * rhs is a whitespace-separated integer vector of length rows(m); mode runs
 * from 0 (no sign constraints) to cols(m) (fully nonnegative). An empty
 * result means the fiber is empty. */
int af_minimal_elements(af_matrix* m, const char* rhs, long long mode, af_vector_list** out);

/* Element listing of one fiber. *out_complete is set nonzero when the fiber
 * is finite and the listing is the whole fiber; otherwise the listing holds
 * the conformally minimal elements of an infinite fiber. */
int af_fiber_elements(af_matrix* m, const char* rhs, long long mode, int* out_complete,
                      af_vector_list** out);

/* Rendered element listings for a whole list of right-hand sides. */
int af_fiber_listings(af_matrix* m, const af_vector_list* rhs_list, long long mode,
                      char** out_text);

/* --- atomic fibers ----------------------------------------------------- */

int af_atomic_fibers(af_matrix* m, af_vector_list** out);
int af_atomic_fibers_mode(af_matrix* m, long long mode, af_vector_list** out);
int af_extended_atomic_fibers(af_matrix* m, af_vector_list** out);

/* Extended atomic fibers of the subgroup generated by the given vectors and
 * their negatives. Fails with AF_ERR_INFEASIBLE_SEED when a generator is not
 * integrally attainable. */
int af_sublattice_atomic_fibers(af_matrix* m, const af_vector_list* generators,
                                af_vector_list** out);

/* --- decomposition ------------------------------------------------------ */

/* Writes rhs's fiber as a multiset of atoms drawn from `atoms`. Fails with
 * AF_ERR_INFEASIBLE when the fiber is empty and AF_ERR_INCOMPLETE_ATOMS when
 * the atoms cannot exhaust it. */
int af_decompose(af_matrix* m, const char* rhs, const af_vector_list* atoms, long long mode,
                 af_decomposition** out);
void af_decomposition_free(af_decomposition* d);
long long af_decomposition_size(const af_decomposition* d);
int af_decomposition_term(const af_decomposition* d, long long index, char** out_rhs,
                          char** out_multiplicity);
int af_decomposition_format(const af_decomposition* d, char** out_text);

/* --- integer programs ---------------------------------------------------- */

/* min{cost . z : m z = rhs, z >= 0} via per-atom optima. cost entries are
 * integers or fractions like 3/2. atoms may be NULL, in which case the
 * fully constrained atomic fibers are computed first. An unbounded program
 * yields AF_OK with af_solution_unbounded() nonzero. */
int af_solve_ip(af_matrix* m, const char* rhs, const char* cost, const af_vector_list* atoms,
                af_solution** out);
void af_solution_free(af_solution* s);
int af_solution_unbounded(const af_solution* s);
int af_solution_value(const af_solution* s, char** out_text);
int af_solution_point(const af_solution* s, char** out_text);
int af_solution_format(const af_solution* s, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ATOMFIBER_H */
