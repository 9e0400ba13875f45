/* C interface to the community/anomaly tracking library.
 *
 * All matrices cross this boundary as dense row-major double buffers with
 * caller-owned storage. Handles are opaque; every ct_*_free accepts NULL.
 * Functions return CT_OK on success; on failure ct_last_error_message()
 * describes the fault for the calling thread.
 */
#ifndef COMTRACK_H
#define COMTRACK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ct_status {
  CT_OK = 0,
  CT_ERR_INVALID_ARG = 1,
  CT_ERR_VALIDATION = 2,
  CT_ERR_PARSE = 3,
  CT_ERR_IO = 4,
  CT_ERR_NUMERIC = 5
} ct_status;

const char* ct_last_error_message(void);

/* ---- snapshot series ---- */

typedef struct ct_series ct_series;

ct_status ct_series_load(const char* path, ct_series** out);
ct_status ct_series_save(const ct_series* series, const char* path);
ct_status ct_series_log_transform(ct_series* series);
int ct_series_length(const ct_series* series);
int ct_series_nodes(const ct_series* series);
/* Copies snapshot t into entries[n*n], row-major. */
ct_status ct_series_snapshot(const ct_series* series, int t, double* entries);
void ct_series_free(ct_series* series);

/* ---- synthetic generation ---- */

typedef struct ct_generate_params {
  int n;                       /* node count; block sizes must sum to it */
  int c;                       /* community / block count */
  const int* block_sizes;      /* length c */
  const double* affinity;      /* c*c row-major, entries in [0,1] */
  const int* anomaly_rows;     /* length anomaly_count, may be NULL */
  int anomaly_count;
  double anomaly_magnitude;    /* <= 0 selects the max entry of U0 */
  int t_len;                   /* interval count */
  uint64_t sbm_seed;
  uint64_t anomaly_seed;
  uint64_t evolve_seed;
} ct_generate_params;

/* Builds the evolving anomaly scenario: SBM snapshot, NMF-based outlier
 * injection, per-edge on/off profiles. ground_truth_o (n*c, may be NULL)
 * receives the injected outlier matrix. */
ct_status ct_generate(const ct_generate_params* params, ct_series** out,
                      double* ground_truth_o);

/* ---- solver configuration ---- */

typedef enum ct_schedule_kind {
  CT_SCHEDULE_CONSTANT = 0,
  CT_SCHEDULE_SQRT_GROWTH = 1 /* base * sqrt(t), t counted from 1 */
} ct_schedule_kind;

typedef struct ct_hyperparams {
  int c;
  double beta;
  ct_schedule_kind lambda_kind;
  double lambda_base;
  ct_schedule_kind mu_kind;
  double mu_base;
  double inner_tol;   /* <= 0 -> 1e-8 */
  int max_inner;      /* <= 0 -> 200 */
  double outer_tol;   /* <= 0 -> 1e-6 */
  int max_outer;      /* <= 0 -> 30 */
  int fixed_steps;    /* nonzero: use alpha_u / alpha_v as given */
  double alpha_u;
  double alpha_v;
  double rho;         /* consensus penalty; <= 0 -> 1.0 */
  double anomaly_eps; /* < 0 -> 1e-3 */
} ct_hyperparams;

typedef enum ct_algorithm {
  CT_ALG_EXACT = 0,
  CT_ALG_INEXACT = 1,
  CT_ALG_SGD = 2,
  CT_ALG_DECENTRALIZED = 3,
  CT_ALG_BATCH_REFERENCE = 4
} ct_algorithm;

typedef enum ct_init_kind {
  CT_INIT_NMF_FIRST = 0,
  CT_INIT_GIVEN = 1,
  CT_INIT_RANDOM = 2
} ct_init_kind;

typedef struct ct_init {
  ct_init_kind kind;
  uint64_t seed;        /* NMF or random draw seed */
  const double* u;      /* n*c row-major, CT_INIT_GIVEN only */
  const double* v;
  const double* o;      /* may be NULL -> zeros */
} ct_init;

/* ---- agent topology (decentralized runs) ---- */

typedef struct ct_topology ct_topology;

ct_status ct_topology_load(const char* path, int n, ct_topology** out);
ct_status ct_topology_save(const ct_topology* topo, const char* path);
/* Ring of m agents with skip-two chords over n rows. */
ct_status ct_topology_default(int m, int n, ct_topology** out);
int ct_topology_agents(const ct_topology* topo);
void ct_topology_free(ct_topology* topo);

/* ---- tracking ---- */

typedef struct ct_track ct_track;

typedef struct ct_interval_diag {
  int outer_iterations;
  int inner_iterations;
  double objective;
  double update_norm;
  double wall_seconds;
} ct_interval_diag;

typedef struct ct_consensus_diag {
  int rounds;
  double consensus_residual;
  double max_v_deviation;
  long messages;
  double objective;
} ct_consensus_diag;

/* topo is required for CT_ALG_DECENTRALIZED and ignored otherwise. */
ct_status ct_track_run(const ct_series* series, const ct_hyperparams* hp,
                       ct_algorithm algorithm, const ct_init* init,
                       const ct_topology* topo, ct_track** out);
int ct_track_length(const ct_track* track);
/* Copies the interval-t factors into u/v/o (each n*c row-major; NULL skips). */
ct_status ct_track_state(const ct_track* track, int t, double* u, double* v,
                         double* o);
ct_status ct_track_diag(const ct_track* track, int t, ct_interval_diag* out);
/* Fails with CT_ERR_INVALID_ARG unless the track came from a decentralized
 * run. */
ct_status ct_track_consensus(const ct_track* track, int t,
                             ct_consensus_diag* out);
void ct_track_free(ct_track* track);

/* ---- evaluation ---- */

ct_status ct_relative_error(int n, int c, const double* est_u,
                            const double* est_v, const double* est_o,
                            const double* ref_u, const double* ref_v,
                            const double* ref_o, double* out);
ct_status ct_hard_assign(int n, int c, const double* u, int* labels);
/* flags[i] set to 1 when row i of o exceeds eps anywhere, else 0. */
ct_status ct_flag_anomalies(int n, int c, const double* o, double eps,
                            int* flags);
ct_status ct_overlap_profile(int n, int c, const double* u, double* out);
ct_status ct_precision_recall(const int* flagged, int flagged_count,
                              const int* truth, int truth_count,
                              double* precision, double* recall);

/* Shortest round-trip decimal rendering of x, as used in every CSV the
 * library writes; buf receives a NUL-terminated string. */
ct_status ct_format_double(double x, char* buf, size_t buf_len);

#ifdef __cplusplus
}
#endif

#endif /* COMTRACK_H */
