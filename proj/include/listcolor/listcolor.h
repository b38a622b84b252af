#ifndef LISTCOLOR_LISTCOLOR_H
#define LISTCOLOR_LISTCOLOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LC_API __declspec(dllexport)
#else
#define LC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lc_graph lc_graph;

typedef enum lc_status {
    LC_OK = 0,
    /* the graph has no object of the requested kind (e.g. not U2LC) */
    LC_NEGATIVE = 1,
    LC_ERR_INPUT = 2,
    LC_ERR_BUDGET = 3,
    LC_ERR_INTERNAL = 4
} lc_status;

typedef struct lc_options {
    uint64_t budget_nodes;
    /* wall-clock limit in seconds; <= 0 disables it */
    double budget_seconds;
    int jobs;
    /* auto, triangle, chord, theta, i2 or fallback */
    const char * seed_case;
    int single_pass_closure;
} lc_options;

LC_API void lc_options_init(lc_options * options);

/* Message for the last failing call on this thread. */
LC_API const char * lc_last_error(void);
LC_API void lc_string_free(char * s);
LC_API const char * lc_version(void);

LC_API lc_status lc_graph_from_graph6(const char * text, lc_graph ** out);
/* edges holds 2 * edge_count vertex ids */
LC_API lc_status lc_graph_from_edges(int n, const int * edges, size_t edge_count, lc_graph ** out);
LC_API void lc_graph_free(lc_graph * g);
LC_API int lc_graph_order(const lc_graph * g);
LC_API lc_status lc_graph_to_graph6(const lc_graph * g, char ** out);
/* labels_json: optional object mapping vertex ids to label strings */
LC_API lc_status lc_graph_to_dot(const lc_graph * g, const char * labels_json, char ** out);

/* All results below are JSON documents released with lc_string_free. */

LC_API lc_status lc_decide(const lc_graph * g, const lc_options * options, char ** json_out);
/* LC_NEGATIVE comes with the block report in json_out. */
LC_API lc_status lc_synthesize(const lc_graph * g, const lc_options * options, char ** json_out);
/* lists_json is a certificate or a bare {"vertex": [colours]} object. */
LC_API lc_status lc_verify(const lc_graph * g, const char * lists_json, const lc_options * options, char ** json_out);
/* k_min = k_max restricts the search to one k. Budget exhaustion still
   fills json_out, with exhaustive=false on the affected records. */
LC_API lc_status lc_chi_u(const lc_graph * g, int k_min, int k_max, int t_max, const lc_options * options,
    char ** json_out);
LC_API lc_status lc_uniquely(const lc_graph * g, int k, int t, const lc_options * options, char ** json_out);
LC_API lc_status lc_conjecture(const lc_graph * g, int k_max, const lc_options * options, char ** json_out);
LC_API lc_status lc_closure(const lc_graph * g, int t, const lc_options * options, char ** json_out);

#ifdef __cplusplus
}
#endif

#endif
