#ifndef SOLIDANGLE_H
#define SOLIDANGLE_H

/*
 * C interface to the solid-angle library.
 *
 * Exact inputs are decimal rational strings ("p" or "p/q"). Functions return
 * an sa_status; on failure sa_last_error() describes the problem for the
 * calling thread. Strings returned through char** out-parameters are owned by
 * the caller and released with sa_string_free. Handles are released with
 * their matching *_free function; passing NULL to any *_free is a no-op.
 */

#include <stddef.h>

#if defined(_WIN32)
#define SA_API __declspec(dllexport)
#else
#define SA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sa_status {
    SA_OK = 0,
    SA_ERR_PARSE = 1,    /* malformed number, polygon text or name */
    SA_ERR_DOMAIN = 2,   /* well-formed input outside an operation's domain */
    SA_ERR_IO = 3,       /* file could not be read */
    SA_ERR_NULL = 4,     /* required pointer argument was NULL */
    SA_ERR_INTERNAL = 5  /* an exact identity failed; indicates a bug */
} sa_status;

/* An exact angle in turns: a rational plus rational multiples of arctan atoms. */
typedef struct sa_angle sa_angle;
/* A validated simple polygon with rational vertices in counterclockwise order. */
typedef struct sa_polygon sa_polygon;

SA_API const char* sa_last_error(void);
SA_API const char* sa_status_name(sa_status status);
SA_API void sa_string_free(char* s);

SA_API void sa_angle_free(sa_angle* a);
SA_API sa_status sa_angle_str(const sa_angle* a, char** out);
SA_API sa_status sa_angle_to_double(const sa_angle* a, double* out);
SA_API int sa_angle_has_atoms(const sa_angle* a);

/* s(h,k;y,x), or s* when star != 0. fast != 0 selects the reciprocity path,
 * which requires y = x = 0 and star = 0. y and x may be NULL (meaning 0). */
SA_API sa_status sa_dedekind(const char* h, const char* k, const char* y, const char* x, int star,
                             int fast, char** out);

SA_API sa_status sa_triangle_A(const char* h, const char* k, const char* t, sa_angle** out);
SA_API sa_status sa_triangle_L(const char* h, const char* k, const char* t, char** out);
/* "a2=...\na1=...\na0=...\n" followed by c1..c6, one per line. */
SA_API sa_status sa_triangle_coeffs(const char* h, const char* k, const char* t, char** out);

SA_API sa_status sa_polygon_parse(const char* text, sa_polygon** out);
SA_API sa_status sa_polygon_read_file(const char* path, sa_polygon** out);
SA_API void sa_polygon_free(sa_polygon* p);
SA_API size_t sa_polygon_size(const sa_polygon* p);
SA_API sa_status sa_polygon_A(const sa_polygon* p, const char* t, sa_angle** out);
SA_API sa_status sa_polygon_L(const sa_polygon* p, const char* t, char** out);

SA_API sa_status sa_oracle_A(const sa_polygon* p, const char* t, sa_angle** out);
SA_API sa_status sa_oracle_L(const sa_polygon* p, const char* t, char** out);

/* CSV "t,A_float,L_int" at t_min + i (t_max - t_min)/steps, i = 0..steps,
 * with exact rational t. Requires 0 < t_min < t_max and steps >= 1. */
SA_API sa_status sa_sweep_csv(const char* h, const char* k, const char* t_min, const char* t_max,
                              long steps, char** out);

/* Convergence CSV "epsilon,value,abs_error" for a1, b1, b2, b3, c3-sum or
 * c6-sum. eps may be NULL (default schedule); c is the radius multiplier. */
SA_API sa_status sa_spectral_csv(const char* target, const char* h, const char* k, const char* t,
                                 const double* eps, size_t n_eps, double c, char** out);

/* Twisted-transform CSV over the given even grid sizes. matrix is row-major
 * (m, n, p, q); shift_x and shift_y may be NULL (meaning 0). */
SA_API sa_status sa_twisted_csv(const long matrix[4], const long xi[2], const char* shift_x,
                                const char* shift_y, const int* grids, size_t n_grids, char** out);

/* Runs a verify suite ("reciprocity", "pick", "oracle", "knuth", "spectral"
 * or "all"); *passed is set to 1 iff every check passed. */
SA_API sa_status sa_verify(const char* suite, char** summary, int* passed);

#ifdef __cplusplus
}
#endif

#endif
