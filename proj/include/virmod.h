/* C API for the weight-module verification library. All functions return
 * vm_status; results come back through out-parameters. Strings returned
 * through char** out-parameters are owned by the caller and must be
 * released with vm_string_free(). Handles are opaque and freed with their
 * matching *_free function. vm_last_error() returns a thread-local message
 * for the most recent failing call. */

#ifndef VIRMOD_H
#define VIRMOD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vm_instance_s vm_instance_t;
typedef struct vm_vector_s vm_vector_t;

typedef enum {
  VM_OK = 0,
  VM_ERR_PARSE = 1,    /* malformed descriptor, vector, or operator literal */
  VM_ERR_CONFIG = 2,   /* violated descriptor conditions or suite preconditions */
  VM_ERR_MISMATCH = 3, /* vector does not belong to the instance */
  VM_ERR_INTERNAL = 4
} vm_status;

const char* vm_version(void);
const char* vm_last_error(void);
void vm_string_free(char* s);

/* Instances: a descriptor document (JSON text with fields family,
 * parameters, mode) instantiated as a module. */
vm_status vm_instance_from_string(const char* json_text, vm_instance_t** out);
vm_status vm_instance_from_file(const char* path, vm_instance_t** out);
void vm_instance_free(vm_instance_t* inst);

/* Human-readable summary: family, rank, parameters, validation result. */
vm_status vm_instance_describe(const vm_instance_t* inst, char** out);
/* Canonical descriptor JSON; reparsing it reproduces the instance. */
vm_status vm_instance_canonical(const vm_instance_t* inst, char** out);

/* Vectors: semicolon-separated "component @ grade" pairs; the component
 * grammar depends on the family (rational, polynomial in x, or
 * coefficient*[monomial] sums). */
vm_status vm_vector_parse(const vm_instance_t* inst, const char* literal,
                          vm_vector_t** out);
vm_status vm_vector_format(const vm_vector_t* vec, char** out);
void vm_vector_free(vm_vector_t* vec);

/* Apply an operator literal: "d(m)", "t(k)", "c", or "omega(l,m,s)". */
vm_status vm_apply(const vm_instance_t* inst, const char* op_spec,
                   const vm_vector_t* vec, vm_vector_t** out);

typedef struct {
  uint64_t seed;
  int window;
  int samples;
  int degree_cap;
  /* optional exact-rational overrides as "p/q" strings; NULL = default */
  const char* mw_z;
  const char* mw_m2;
  const char* mw_m3;
  const char* mw_m4;
  const char* ab_b;
} vm_verify_options;

void vm_verify_options_init(vm_verify_options* opts);

/* Run the selected suites (comma-separated selectors out of bracket, hv,
 * lemma3, constant, reach, intertwiner, tensor, eh, ab, mw, all). The
 * report document (JSON) is returned through report_out; *all_passed is 1
 * iff every selected suite passed. A failing suite is a result, not an
 * error: the call still returns VM_OK. */
vm_status vm_verify(const vm_instance_t* inst, const char* suites,
                    const vm_verify_options* opts, char** report_out,
                    int* all_passed);

/* Reachability probe: rank of bounded operator words applied to the seed
 * vector against the slice dimension. *full is 1 iff the slice was filled. */
vm_status vm_probe(const vm_instance_t* inst, const char* seed_literal,
                   int degree_cap, long grade_lo, long grade_hi, int op_window,
                   int max_len, char** report_out, int* full);

#ifdef __cplusplus
}
#endif

#endif /* VIRMOD_H */
