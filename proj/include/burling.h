/* C interface to the Burling graph library.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function. Strings returned through char** are
 * NUL-terminated and released with burling_string_free. Functions returning
 * burling_status leave their out-parameters untouched unless the status is
 * BURLING_OK (or BURLING_NEGATIVE where documented). On an error status,
 * burling_last_error() describes the failure for the calling thread.
 */
#ifndef BURLING_H
#define BURLING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BURLING_API __declspec(dllexport)
#else
#define BURLING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum burling_status {
  BURLING_OK = 0,
  BURLING_NEGATIVE = 1,      /* not a Burling graph / verification failed */
  BURLING_ERR_INPUT = 2,     /* malformed input or violated precondition */
  BURLING_ERR_CONTRACT = 3,  /* an internal invariant did not hold */
  BURLING_ERR_INTERNAL = 4   /* out of memory or unexpected exception */
} burling_status;

typedef struct burling_graph burling_graph;
typedef struct burling_set burling_set;
typedef struct burling_frames burling_frames;

BURLING_API const char* burling_last_error(void);
BURLING_API void burling_string_free(char* s);

/* Graphs on vertices 0..n-1. `edges` holds 2*edge_count endpoints. */
BURLING_API burling_status burling_graph_parse(const char* text, burling_graph** out);
BURLING_API burling_status burling_graph_create(size_t n, const uint32_t* edges, size_t edge_count,
                                                burling_graph** out);
BURLING_API size_t burling_graph_vertex_count(const burling_graph* g);
BURLING_API size_t burling_graph_edge_count(const burling_graph* g);
BURLING_API int burling_graph_equal(const burling_graph* a, const burling_graph* b);
BURLING_API void burling_graph_free(burling_graph* g);

/* Burling sets, read from and written to the JSON set format. */
BURLING_API burling_status burling_set_parse_json(const char* json, burling_set** out);
BURLING_API burling_status burling_set_to_json(const burling_set* b, char** out);
BURLING_API size_t burling_set_size(const burling_set* b);
BURLING_API int burling_set_equal(const burling_set* a, const burling_set* b);
/* BURLING_OK if the axioms hold, BURLING_NEGATIVE otherwise; `report`
 * (optional) receives one line per violation. */
BURLING_API burling_status burling_set_verify(const burling_set* b, char** report);
BURLING_API burling_status burling_set_graph(const burling_set* b, burling_graph** out);
BURLING_API void burling_set_free(burling_set* b);

/* BURLING_NEGATIVE if `g` is not a Burling graph. `subproblems` is optional. */
BURLING_API burling_status burling_recognize(const burling_graph* g, burling_set** out, size_t* subproblems);
/* Same answer by exhaustive search; at most 6 vertices. */
BURLING_API burling_status burling_oracle_recognize(const burling_graph* g, burling_set** out);

/* Frame families. */
BURLING_API burling_status burling_frames_build(const burling_set* b, int linear, burling_frames** out);
BURLING_API burling_status burling_frames_parse_json(const char* json, burling_frames** out);
BURLING_API burling_status burling_frames_to_json(const burling_frames* f, char** out);
BURLING_API burling_status burling_frames_to_svg(const burling_frames* f, char** out);
BURLING_API size_t burling_frames_size(const burling_frames* f);
/* BURLING_OK if the family is strict, BURLING_NEGATIVE otherwise. */
BURLING_API burling_status burling_frames_verify(const burling_frames* f, char** report);
BURLING_API burling_status burling_frames_extract(const burling_frames* f, burling_set** out);
BURLING_API burling_status burling_frames_graph(const burling_frames* f, burling_graph** out);
BURLING_API void burling_frames_free(burling_frames* f);

/* Reads `name weight` lines for vertices "0".."n-1" into `weights`, which
 * must hold burling_graph_vertex_count(g) entries. */
BURLING_API burling_status burling_weights_parse(const burling_graph* g, const char* text, int64_t* weights);

/* Maximum-weight independent set. `members` must hold
 * burling_graph_vertex_count(g) entries; the first *member_count are the
 * chosen vertices in ascending order. burling_mis answers BURLING_NEGATIVE
 * when `g` is not a Burling graph; burling_oracle_mis searches exhaustively
 * and handles at most 24 vertices. */
BURLING_API burling_status burling_mis(const burling_graph* g, const int64_t* weights, uint32_t* members,
                                       size_t* member_count, int64_t* total);
BURLING_API burling_status burling_oracle_mis(const burling_graph* g, const int64_t* weights, uint32_t* members,
                                              size_t* member_count, int64_t* total);

/* Random Burling set with `size` elements named "0".."size-1". */
BURLING_API burling_status burling_generate(size_t size, uint64_t seed, burling_set** out);

#ifdef __cplusplus
}
#endif

#endif
