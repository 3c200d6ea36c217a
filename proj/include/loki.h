/* Public C interface of liblokisim: a deterministic, cycle-accurate
 * simulator of the LOKI digital spiking-neural-network accelerator core
 * (256 quantized LIF neurons, 4-bank multi-cycle clock-gated synapse SRAM,
 * dual-bank neuron memory, block AER output).
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a loki_status; LOKI_OK is 0. On failure,
 * loki_last_error() returns a thread-local description of what went wrong.
 * Handles are not thread-safe individually, but distinct handles may be
 * used from distinct threads freely.
 */

#ifndef LOKI_H
#define LOKI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LOKI_API __declspec(dllexport)
#else
#define LOKI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum loki_status {
    LOKI_OK = 0,
    LOKI_ERR_INVALID_ARG = 1,  /* parameter out of range or null handle */
    LOKI_ERR_IO = 2,           /* file could not be read or written */
    LOKI_ERR_FORMAT = 3,       /* config image malformed */
    LOKI_ERR_PARSE = 4,        /* event stream text malformed */
    LOKI_ERR_BUSY = 5,         /* core mid-stream, cannot reprogram */
    LOKI_ERR_STATE = 6,        /* operation invalid in the current state */
    LOKI_ERR_TIMING = 7,       /* memory scheduling violation */
    LOKI_ERR_MISMATCH = 8,     /* compared runs were configured differently */
    LOKI_ERR_ZERO_DIV = 9,     /* derived figure undefined (no cycles) */
    LOKI_ERR_INTERNAL = 10     /* engine self-check failed */
} loki_status;

LOKI_API const char* loki_status_name(loki_status status);

/* Thread-local message describing the most recent failure on this thread. */
LOKI_API const char* loki_last_error(void);

LOKI_API const char* loki_version_string(void);

/* ------------------------------------------------------------------ */
/* Event streams                                                      */
/* ------------------------------------------------------------------ */

typedef struct loki_events loki_events;

/* Text format: one event per line. "S <addr>" is a spike at input address
 * 0..255, "T" the time reference ending a timestep, "#" a comment.
 * "B <blk> <hex8>" packet-log lines are accepted and skipped. */
LOKI_API loki_status loki_events_parse_file(const char* path, loki_events** out);
LOKI_API loki_status loki_events_parse_text(const char* text, loki_events** out);

/* Synthetic peak-utilization stream: `timesteps` timesteps in which every
 * input address 0..255 spikes once (0% sparsity). */
LOKI_API loki_status loki_events_dense(uint32_t timesteps, loki_events** out);

LOKI_API void loki_events_free(loki_events* events);

LOKI_API uint64_t loki_events_count(const loki_events* events);

/* Non-fatal diagnostics collected while parsing. */
LOKI_API uint32_t loki_events_warning_count(const loki_events* events);
LOKI_API const char* loki_events_warning(const loki_events* events, uint32_t index);

/* Canonical "S"/"T" serialization of the stream. */
LOKI_API loki_status loki_events_write_file(const loki_events* events, const char* path);

/* ------------------------------------------------------------------ */
/* Cycle-accurate simulator                                           */
/* ------------------------------------------------------------------ */

typedef struct loki_sim loki_sim;

/* Activity-based energy model coefficients, all in joules. */
typedef struct loki_energy_model {
    double e_synapse_word_read;
    double e_neuron_word_rw;
    double e_logic_per_cycle;
    double e_handshake;
} loki_energy_model;

/* Shipped calibrated defaults (see README for the fit). */
LOKI_API void loki_energy_model_default(loki_energy_model* out);

/* Creates a core programmed from a binary parameter image (file or memory).
 * The image holds the 256x256 4-bit weights, the shared 8-bit threshold and
 * the leak exponent; see README for the exact layout. */
LOKI_API loki_status loki_sim_create(const char* config_path, loki_sim** out);
LOKI_API loki_status loki_sim_create_from_memory(const void* bytes, size_t len,
                                                 loki_sim** out);
LOKI_API void loki_sim_free(loki_sim* sim);

LOKI_API loki_status loki_sim_set_clock_hz(loki_sim* sim, double hz);
LOKI_API loki_status loki_sim_set_emit_empty_blocks(loki_sim* sim, int on);

/* Cycles charged per output packet handshake (default 1). Raising it shows
 * what a slower output interface costs; it never stalls spike processing. */
LOKI_API loki_status loki_sim_set_handshake_cycles(loki_sim* sim, uint32_t cycles);
LOKI_API loki_status loki_sim_set_energy_model(loki_sim* sim,
                                               const loki_energy_model* model);

/* Processes the events strictly in order. May be called repeatedly; state
 * and counters carry over, so successive calls extend the same run. */
LOKI_API loki_status loki_sim_run(loki_sim* sim, const loki_events* events);

typedef struct loki_report {
    uint64_t cycles;          /* measured spike-phase cycles */
    uint64_t sops;
    uint64_t input_spikes;
    uint64_t output_spikes;
    uint64_t handshakes;
    uint64_t timesteps;
    uint64_t synapse_word_reads;
    uint64_t neuron_word_accesses;
    double gsops;             /* 0 when no cycles were measured */
    double total_joules;
    double pj_per_sop;        /* NaN when the run performed no SOPs */
} loki_report;

LOKI_API loki_status loki_sim_report(const loki_sim* sim, loki_report* out);

/* Flat stats document; keys cycles, sops, gsops, pj_per_sop, input_spikes,
 * output_spikes, handshakes, timesteps. Byte-stable for identical runs.
 * Free the returned text with loki_text_free. */
LOKI_API loki_status loki_sim_stats_json(const loki_sim* sim, char** out_text);
LOKI_API loki_status loki_sim_stats_csv(const loki_sim* sim, char** out_text);
LOKI_API void loki_text_free(char* text);

/* All 256 membrane potentials, for state inspection and oracle checks. */
LOKI_API loki_status loki_sim_potentials(const loki_sim* sim, int8_t out[256]);

/* Total simulated cycles including leak-and-fire phases (the measured
 * report.cycles excludes them). */
LOKI_API uint64_t loki_sim_cycle(const loki_sim* sim);

/* Output spikes of completed timesteps as an input stream for a next core
 * (each timestep's decoded spikes in ascending order, then "T"). */
LOKI_API loki_status loki_sim_output_events(const loki_sim* sim, loki_events** out);

/* Output log: per timestep the raw "B <blk> <hex8>" packet lines followed by
 * the decoded spikes and "T". Parseable as an input stream. */
LOKI_API loki_status loki_sim_write_output_log(const loki_sim* sim, const char* path);

/* ------------------------------------------------------------------ */
/* Golden functional model                                            */
/* ------------------------------------------------------------------ */

typedef struct loki_golden loki_golden;

LOKI_API loki_status loki_golden_create(const char* config_path, loki_golden** out);
LOKI_API loki_status loki_golden_create_from_memory(const void* bytes, size_t len,
                                                    loki_golden** out);
LOKI_API void loki_golden_free(loki_golden* golden);

LOKI_API loki_status loki_golden_run(loki_golden* golden, const loki_events* events);
LOKI_API loki_status loki_golden_potentials(const loki_golden* golden, int8_t out[256]);
LOKI_API loki_status loki_golden_output_events(const loki_golden* golden,
                                               loki_events** out);

/* Count-only stats for the functional model (no cycles, no energy). */
LOKI_API loki_status loki_golden_stats_json(const loki_golden* golden, char** out_text);

/* ------------------------------------------------------------------ */
/* Equivalence checking                                               */
/* ------------------------------------------------------------------ */

typedef struct loki_verdict {
    int bit_exact;       /* nonzero when the runs agree completely */
    int32_t timestep;    /* first diverging timestep; -1 = final potentials */
    int32_t neuron;      /* first diverging neuron, -1 if not localized */
    char detail[256];
} loki_verdict;

/* Runs the cycle-accurate engine and the golden model on one configuration
 * and event stream and compares per-timestep fire sets and final
 * potentials. */
LOKI_API loki_status loki_compare_file(const char* config_path,
                                       const loki_events* events,
                                       loki_verdict* out);

/* Seeded randomized trials (random configuration and stream per trial).
 * Returns LOKI_OK with out->bit_exact = 0 on the first diverging trial;
 * failed_trial receives its index. */
LOKI_API loki_status loki_compare_trials(uint32_t trials, uint64_t seed,
                                         loki_verdict* out, uint32_t* failed_trial);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LOKI_H */
