#ifndef HERMK3_H
#define HERMK3_H

/* C interface to the hermk3 library. Every call returns an hk3_status; on
   failure hk3_last_error() holds a message for the calling thread. Strings
   returned through char** are owned by the caller and released with
   hk3_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HK3_API __declspec(dllexport)
#else
#define HK3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HK3_OK = 0,
  HK3_E_INVALID_ARGUMENT = 1,
  HK3_E_INADMISSIBLE = 2,
  HK3_E_CONVERGENCE = 3,
  HK3_E_DIVISION_BY_ZERO = 4,
  HK3_E_LOCUS_MISMATCH = 5,
  HK3_E_BOUNDS = 6,
  HK3_E_CAPACITY = 7,
  HK3_E_INTERNAL = 99
} hk3_status;

typedef struct {
  double re;
  double im;
} hk3_complex;

/* radius 0 picks the truncation radius from tail_tol */
typedef struct {
  int radius;
  double tail_tol;
} hk3_truncation;

typedef struct {
  int radius;
  double tail_bound;
} hk3_truncation_info;

typedef struct hk3_series hk3_series;
typedef struct hk3_group hk3_group;

HK3_API const char* hk3_version(void);
HK3_API const char* hk3_last_error(void);
HK3_API void hk3_string_free(char* s);

/* theta constants; j in 0..9, k in 0..4 */
HK3_API hk3_status hk3_siegel_theta(int j, hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr,
                                    hk3_complex* out, hk3_truncation_info* info);
HK3_API hk3_status hk3_hermitian_theta(int k, hk3_complex tau, hk3_complex z, hk3_complex w, hk3_complex tau_prime,
                                       hk3_truncation tr, hk3_complex* out, hk3_truncation_info* info);

/* name: psi4, psi6, chi10, chi12 */
HK3_API hk3_status hk3_igusa(const char* name, hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr,
                             hk3_complex* out);
/* weight in {4, 6, 10, 12, 18} */
HK3_API hk3_status hk3_burkhardt(int weight, const hk3_complex T[5], hk3_complex* out);
HK3_API hk3_status hk3_d90(const hk3_complex t[5], hk3_complex* out);

/* moduli point (t4 : t6 : t10 : t12 : t18); normalized may be NULL */
HK3_API hk3_status hk3_inverse_period(hk3_complex tau, hk3_complex z, hk3_complex w, hk3_complex tau_prime,
                                      hk3_truncation tr, hk3_complex t[5], hk3_complex normalized[5],
                                      hk3_truncation_info* info);
/* (alpha : beta : gamma : delta) */
HK3_API hk3_status hk3_cd_map(hk3_complex tau, hk3_complex z, hk3_complex tau_prime, hk3_truncation tr,
                              hk3_complex out[4]);

/* Fourier expansions.
   subject "theta" (selector j, locus ignored), "dk-theta" (selector k), "igusa" (selector name),
   "burkhardt" (selector weight); locus "z=w" or "z=-w"; order a rational such as "2" or "1/2". */
HK3_API hk3_status hk3_qexp(const char* subject, const char* selector, const char* locus, const char* order,
                            hk3_series** out);
HK3_API hk3_status hk3_series_size(const hk3_series* s, size_t* out);
HK3_API hk3_status hk3_series_json(const hk3_series* s, char** out);
/* leading term as text; HK3_E_INVALID_ARGUMENT for zero or ambiguous series */
HK3_API hk3_status hk3_series_leading(const hk3_series* s, char** out);
HK3_API void hk3_series_free(hk3_series* s);

/* closure of the four generator images */
HK3_API hk3_status hk3_group_burkhardt(hk3_group** out);
HK3_API hk3_status hk3_group_order(const hk3_group* g, size_t* out);
/* sorted canonical element strings, JSON array */
HK3_API hk3_status hk3_group_elements_json(const hk3_group* g, char** out);
/* JSON array of "p/q" strings, degrees 0..max_degree */
HK3_API hk3_status hk3_group_molien_json(const hk3_group* g, int max_degree, char** out);
HK3_API void hk3_group_free(hk3_group* g);

/* critical points of the fibration for t = (t4, t6, t10, t12, t18), JSON */
HK3_API hk3_status hk3_critical_points_json(const hk3_complex t[5], char** out);

typedef struct {
  double tol;
  uint64_t seed;
  int samples;
  int radius;
  int order;
  int timings;
} hk3_verify_options;

HK3_API hk3_verify_options hk3_verify_defaults(void);
/* suite: all, lattice, theta, qexp, invariants, group, fibration; *all_pass set to 0 or 1 */
HK3_API hk3_status hk3_verify(const char* suite, const hk3_verify_options* opts, char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
