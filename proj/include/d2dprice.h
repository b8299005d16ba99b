/* d2dprice - interference pricing for D2D underlay networks.
 *
 * C interface to the d2dprice core. All functions return d2d_status unless
 * noted; on any status other than D2D_OK the output arguments are untouched
 * and d2d_last_error() returns a diagnostic for the calling thread.
 *
 * Array arguments are caller-allocated with one entry per user (length n =
 * d2d_network_size), except the channel matrix h which holds n*n gains in
 * row-major order with h[j*n+i] the gain from source j to destination i.
 * Output pointers may be NULL when a value is not wanted.
 */
#ifndef D2DPRICE_H
#define D2DPRICE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define D2D_API_VERSION 1

typedef enum d2d_status {
  D2D_OK = 0,
  D2D_ERR_INVALID_ARGUMENT = 1, /* bad sizes, out-of-domain values, bad handle */
  D2D_ERR_CONFIG = 2,           /* malformed configuration document */
  D2D_ERR_IO = 3,               /* file could not be read or written */
  D2D_ERR_SOLVER = 4,           /* a solver failed (LP not optimal, stalled iteration) */
  D2D_ERR_INTERNAL = 5
} d2d_status;

typedef enum d2d_lp_status {
  D2D_LP_OPTIMAL = 0,
  D2D_LP_INFEASIBLE = 1,
  D2D_LP_UNBOUNDED = 2
} d2d_lp_status;

/* Library version string ("major.minor.patch"). */
const char* d2d_version(void);

/* Diagnostic for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next library call
 * on the same thread. */
const char* d2d_last_error(void);

/* ------------------------------------------------------------------ */
/* Network handles                                                    */

typedef struct d2d_network d2d_network;

/* Builds a network from explicit parameters. Gains, weights, sigma2, power
 * caps, and i_th must be finite and strictly positive. */
d2d_status d2d_network_create(int n, const double* h, const double* g, double sigma2,
                              const double* w, const double* p_max, double i_th,
                              d2d_network** out);

/* Draws a random network realization from a topology JSON document with
 * fields n, cell_radius, pair_distance_max, path_loss_exponent, sigma2,
 * weight, p_max_db, i_th, seed (all optional except n). Deterministic in
 * seed. */
d2d_status d2d_network_sample(const char* topology_json, d2d_network** out);

void d2d_network_free(d2d_network* net);

/* Number of users, or -1 for a NULL handle. */
int d2d_network_size(const d2d_network* net);

/* Copies the network parameters into caller buffers. Any pointer may be
 * NULL to skip that field. */
d2d_status d2d_network_export(const d2d_network* net, double* h, double* g, double* sigma2,
                              double* w, double* p_max, double* i_th);

/* ------------------------------------------------------------------ */
/* Metrics and the power game                                         */

/* Per-user rates and payoffs plus base-station revenue and total received
 * interference at an operating point. */
d2d_status d2d_metrics(const d2d_network* net, const double* powers, const double* prices,
                       double* rates, double* payoffs, double* revenue, double* interference);

/* Best-response iteration from p0 (NULL for the all-zero start). Passing
 * tol <= 0 or max_iter <= 0 selects the defaults (1e-8, 10000). converged is
 * 0 or 1. */
d2d_status d2d_solve_ne(const d2d_network* net, const double* prices, const double* p0,
                        double tol, int max_iter, double* powers, int* iterations,
                        int* converged, double* residual);

/* ------------------------------------------------------------------ */
/* Price setting                                                      */

/* Uniform price bounds: above `upper` nobody transmits, below `lower`
 * everybody transmits at full power. */
d2d_status d2d_price_bounds(const d2d_network* net, double* lower, double* upper);

/* Descending search for the best feasible uniform price. epsilon <= 0
 * selects the default step (upper - lower) / 1000. */
d2d_status d2d_solve_uniform(const d2d_network* net, double epsilon, double* price,
                             double* powers, double* revenue, double* interference);

/* LP-based differentiated prices. cross_term selects the variant of the
 * linearization's equality rows (nonzero: coupled rows, the default used by
 * the scenario runner; zero: the diagonal form). Reports the recovered
 * operating point, the revenue objective at it, and verification data:
 * fixed_point_residual is the sup-norm gap to the equilibrium at the
 * recovered prices, original_feasible (0/1) checks the power box and the
 * interference cap, revenue_vs_uniform is the revenue advantage over the
 * uniform scheme on the same network. */
d2d_status d2d_solve_differentiated(const d2d_network* net, int cross_term, double* prices,
                                    double* powers, double* objective, d2d_lp_status* lp_status,
                                    double* fixed_point_residual, int* original_feasible,
                                    double* revenue_vs_uniform);

/* Closed-form suboptimal differentiated prices and powers. */
d2d_status d2d_solve_suboptimal(const d2d_network* net, double* prices, double* powers);

/* ------------------------------------------------------------------ */
/* Scenario runner                                                    */

/* Runs a scenario config (JSON text or file) and writes its CSV and
 * metadata sidecar under out_dir (NULL for the working directory). seed and
 * trials, when non-NULL, override the config; full_trials nonzero switches
 * to the config's full trial count. report_json, when non-NULL, receives a
 * JSON summary {"csv", "meta", "rows", "excluded_trials"} to be freed with
 * d2d_string_free. */
d2d_status d2d_run_scenario_json(const char* config_json, const char* out_dir,
                                 const uint64_t* seed, const int* trials, int full_trials,
                                 char** report_json);
d2d_status d2d_run_scenario_file(const char* config_path, const char* out_dir,
                                 const uint64_t* seed, const int* trials, int full_trials,
                                 char** report_json);

/* Built-in presets, index 0 .. d2d_preset_count()-1. Name/summary pointers
 * are static. d2d_preset_config_json returns the preset's config document
 * in *json_out, to be freed with d2d_string_free. */
int d2d_preset_count(void);
const char* d2d_preset_name(int index);
const char* d2d_preset_summary(int index);
d2d_status d2d_preset_config_json(const char* name, char** json_out);

void d2d_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* D2DPRICE_H */
