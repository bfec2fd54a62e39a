#ifndef PSHEAF_H
#define PSHEAF_H

/* C interface to the equivariant sheaf machinery: build truncated towers of
 * finite quotients, materialize the reference families on them, serialize
 * everything as JSON or DOT, and run the property-check suites.
 *
 * All functions returning psh_status leave a message for the calling thread
 * in psh_last_error() on failure. Strings handed out through char** are owned
 * by the caller and released with psh_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psh_status {
  PSH_OK = 0,
  PSH_ERR_INVALID = 1,  /* bad argument or unusable request */
  PSH_ERR_PARSE = 2,    /* unreadable spec, literal, or JSON */
  PSH_ERR_CAP = 3,      /* enumeration cap exceeded */
  PSH_ERR_CHECK = 4,    /* construction-time validation failed */
  PSH_ERR_INTERNAL = 5
} psh_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* psh_last_error(void);

const char* psh_version(void);

void psh_string_free(char* s);

/* Towers -------------------------------------------------------------- */

typedef struct psh_tower psh_tower;

/* spec is one of cyclic:n, sym:n, dihedral:n, product:a,b. Levels are the
 * quotients along the canonical normal chain of the group, each carrying its
 * space of subgroups under conjugation. depth < 0 takes the maximal depth;
 * cap <= 0 takes the default element cap. */
psh_status psh_tower_build(const char* spec, int depth, int cap, psh_tower** out);
psh_status psh_tower_from_json(const char* json_text, int cap, psh_tower** out);
void psh_tower_free(psh_tower* t);

int psh_tower_depth(const psh_tower* t);
int psh_tower_level_points(const psh_tower* t, int level);
int psh_tower_level_orbits(const psh_tower* t, int level);

psh_status psh_tower_json(const psh_tower* t, char** out);
psh_status psh_tower_dot(const psh_tower* t, char** out);

/* Reference families --------------------------------------------------- */

/* name is group-ring, fix, or constant. fix uses the regular module of the
 * top group; constant uses the trivial module of the given dim (dim is
 * ignored by the other families). psh_example_json returns the whole family
 * as presheaf JSON, psh_example_top_json only its top level as sheaf JSON. */
psh_status psh_example_json(const psh_tower* t, const char* name, int dim, char** out);
psh_status psh_example_top_json(const psh_tower* t, const char* name, int dim, char** out);

/* Check suites --------------------------------------------------------- */

/* Newline-separated suite names; static storage. */
const char* psh_suite_names(void);

/* Runs one suite on the tower. input_json may carry a sheaf file for the
 * cocycle suite and is otherwise NULL. reports_out receives one JSON object
 * per line, sorted by check name; *all_pass becomes 1 iff every line passed.
 * Failing checks are reported through *all_pass, not the return status. */
psh_status psh_check(const psh_tower* t, const char* suite, uint64_t seed, int count,
                     const char* input_json, char** reports_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
