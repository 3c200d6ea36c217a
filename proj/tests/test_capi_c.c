/* Compiled as C11: proves loki.h is consumable without a C++ compiler. */

#include <stdio.h>
#include <string.h>

#include "loki.h"

static int failures = 0;

static void expect(int cond, const char* what) {
    if (!cond) {
        fprintf(stderr, "FAIL: %s\n", what);
        ++failures;
    }
}

int main(void) {
    expect(strcmp(loki_status_name(LOKI_OK), "ok") == 0, "status name");
    expect(loki_version_string() != NULL, "version string");

    loki_events* events = NULL;
    expect(loki_events_parse_text("S 1\nS 2\nT\n", &events) == LOKI_OK, "parse");
    expect(loki_events_count(events) == 3, "event count");
    expect(loki_events_warning_count(events) == 0, "no warnings");
    loki_events_free(events);

    expect(loki_events_parse_text("S 999\n", &events) == LOKI_ERR_PARSE,
           "range rejected");
    expect(strlen(loki_last_error()) > 0, "error detail");

    loki_energy_model model;
    loki_energy_model_default(&model);
    expect(model.e_synapse_word_read > 0, "default model populated");

    loki_sim* sim = NULL;
    expect(loki_sim_create("/nonexistent.cfg", &sim) == LOKI_ERR_IO, "io error");

    if (failures == 0) {
        printf("C header smoke test passed\n");
        return 0;
    }
    return 1;
}
