#ifndef NPLS_H
#define NPLS_H

/*
 * C interface to the npls library: Nevanlinna-Pick interpolation in the
 * upper half-plane, dissipative state-space realizations, their transfer
 * and impedance functions, coupling invariants, and LC one-port synthesis.
 *
 * All objects are opaque handles created and destroyed by this API. Calls
 * return NPLS_OK (0) on success; on failure they return a status code and
 * leave a human-readable message in npls_last_error() (thread-local).
 * Strings returned through char** are owned by the caller and released
 * with npls_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum npls_status {
  NPLS_OK = 0,
  NPLS_ERR_INTERNAL = 1,
  NPLS_ERR_INVALID_DATA = 2,     /* validation failed (half-plane, duplicates, ...) */
  NPLS_ERR_PICK_NOT_POSITIVE = 3,
  NPLS_ERR_UNPAIRED_NODE = 4,    /* node set not symmetric under z -> -conj(z) */
  NPLS_ERR_NOT_REGULAR = 5,      /* evaluation point inside a pole guard */
  NPLS_ERR_PARSE = 6,
  NPLS_ERR_NOT_APPLICABLE = 7,   /* e.g. kappa outside its domain */
  NPLS_ERR_INVALID_ARGUMENT = 8
} npls_status;

typedef enum npls_form {
  NPLS_FORM_PICK = 0,
  NPLS_FORM_MODEL = 1,
  NPLS_FORM_COUPLING = 2
} npls_form;

typedef struct npls_data npls_data;     /* interpolation data set */
typedef struct npls_system npls_system; /* state-space realization */

const char* npls_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* npls_last_error(void);

void npls_string_free(char* text);

/* ---- interpolation data ------------------------------------------------ */

/* values_re/values_im may both be NULL: targets default to i. */
npls_status npls_data_create(const double* nodes_re, const double* nodes_im,
                             const double* values_re, const double* values_im,
                             size_t count, npls_data** out);

/* {"nodes":[{"re":..,"im":..},...],"values":[...]} ; values optional. */
npls_status npls_data_parse_json(const char* text, npls_data** out);

/* Seeded generator; the result always validates with a strictly positive
 * Pick matrix. */
npls_status npls_data_sample(uint64_t seed, size_t m, npls_data** out);

size_t npls_data_size(const npls_data* data);
npls_status npls_data_node(const npls_data* data, size_t index,
                           double* re, double* im);
npls_status npls_data_value(const npls_data* data, size_t index,
                            double* re, double* im);
void npls_data_free(npls_data* data);

/* Pick matrix positivity. Any output pointer may be NULL. */
npls_status npls_pick_report(const npls_data* data, double tol_pos,
                             double* min_eigenvalue, double* matrix_norm,
                             int* strictly_positive, double* condition);

/* ---- realizations ------------------------------------------------------ */

npls_status npls_system_build(const npls_data* data, npls_form form,
                              npls_system** out);
npls_status npls_system_parse_json(const char* text, npls_system** out);
npls_status npls_system_to_json(const npls_system* sys, char** out);
size_t npls_system_dim(const npls_system* sys);

npls_status npls_system_transfer(const npls_system* sys, double z_re,
                                 double z_im, double* w_re, double* w_im);
npls_status npls_system_impedance(const npls_system* sys, double z_re,
                                  double z_im, double* v_re, double* v_im);

/* finite = 0 marks infinite entropy (value is then unset). */
npls_status npls_system_entropy(const npls_system* sys, int* finite,
                                double* value);
npls_status npls_system_dissipation(const npls_system* sys, double* value);

/* NPLS_ERR_NOT_APPLICABLE when V(i) is not purely imaginary in (0, i]. */
npls_status npls_system_kappa(const npls_system* sys, double* value);

void npls_system_free(npls_system* sys);

/* ---- reports (CLI surface) --------------------------------------------- */

npls_status npls_analyze_json(const npls_data* data, double tol_pos,
                              double tol_node, char** out);

/* all_passed may be NULL. */
npls_status npls_verify_json(const npls_data* data, char** out,
                             int* all_passed);

npls_status npls_regimes_json(const npls_data* data, double tol_node,
                              char** out);

/* Serialized realization, bit-exact round trip through
 * npls_system_parse_json. */
npls_status npls_realize_json(const npls_data* data, npls_form form,
                              char** out);

/* CSV "z_re,z_im,f_re,f_im" over a steps x steps tensor grid. func: 'W' or
 * 'V'. */
npls_status npls_eval_csv(const npls_system* sys, char func, double re0,
                          double re1, double im0, double im1, size_t steps,
                          char** out);

/* LC one-port netlist for a symmetric node set. */
npls_status npls_synth_netlist(const npls_data* data, char** out);

/* CSV "omega,z_re,z_im" frequency sweep of the synthesized network. */
npls_status npls_synth_bode_csv(const npls_data* data, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NPLS_H */
