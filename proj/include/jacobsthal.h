/* C interface to the Jacobsthal covering toolkit.
 *
 * All functions return jac_status unless noted. On failure,
 * jac_last_error() gives a thread-local description. Strings returned
 * through char** are owned by the caller and released with
 * jac_string_free().
 */
#ifndef JACOBSTHAL_H
#define JACOBSTHAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jac_status {
  JAC_OK = 0,
  JAC_VERIFY_FAILED = 1,
  JAC_BAD_INPUT = 2,
  JAC_LIMIT = 3
} jac_status;

typedef enum jac_pool {
  JAC_POOL_PRIMORIAL = 0, /* first k-1 odd primes: computes omega(k) */
  JAC_POOL_MAX = 1        /* odd primes up to q_k: computes Omega(k)  */
} jac_pool;

/* nodes visited, current tentative length, current recursion depth */
typedef void (*jac_progress_fn)(uint64_t nodes, uint32_t length,
                                unsigned depth, void* user);

typedef struct jac_search jac_search; /* opaque search outcome */

const char* jac_last_error(void);
void jac_string_free(char* s);

/* i-th prime, 1-based (p_1 = 2); 0 on bad input. */
uint64_t jac_nth_prime(unsigned index);

/* j(n) by the brute-force period scan; n limited to 2^31. */
jac_status jac_jacobsthal(uint64_t n, uint32_t* out);

/* j(p_k#): the brute-force oracle for h(k), feasible for k <= 8. */
jac_status jac_oracle_h(unsigned k, uint32_t* out);

/* h(k) through the primorial-restricted search for k > 8. */
jac_status jac_h(unsigned k, unsigned threads, uint32_t* out);

/* H(k) = max(Omega(k+1)+1, 2*Omega(k)+2), both Omega values computed. */
jac_status jac_big_h(unsigned k, unsigned threads, uint32_t* out);

/* Run the search. start_length 0 selects the default lower bound;
 * threads 0 means single-threaded; progress may be NULL. The handle
 * must be released with jac_search_free(). */
jac_status jac_omega_run(unsigned k, jac_pool pool, uint32_t start_length,
                         unsigned threads, int enumerate_all,
                         jac_progress_fn progress, void* user,
                         jac_search** out);

uint32_t jac_search_omega(const jac_search* s);
size_t jac_search_covering_count(const jac_search* s);
/* Count of found coverings containing a prime above p_k. */
size_t jac_search_ncov(const jac_search* s);
uint64_t jac_search_nodes(const jac_search* s);
double jac_search_seconds(const jac_search* s);

/* Write remainders_c.txt, moduli_c.txt, permutations_c.txt under dir. */
jac_status jac_search_write_files(const jac_search* s, const char* dir);

void jac_search_free(jac_search* s);

/* Certificate check of a remainders file; *failures receives the
 * failure count and *report the printable summary. */
jac_status jac_verify_file(const char* path, char** report, int* failures);

/* Published-results table, plain text. */
jac_status jac_table_render(unsigned from, unsigned to, char** out);

/* Conjecture report over the published rows. */
jac_status jac_conjectures_render(unsigned from, unsigned to, char** out);

#ifdef __cplusplus
}
#endif

#endif /* JACOBSTHAL_H */
