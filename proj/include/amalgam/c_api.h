#ifndef AMALGAM_C_API_H
#define AMALGAM_C_API_H

/* C interface to the amalgam engine: evaluate a group spec, classify its
 * subgroup lattice, or check a single embedding property. Handles are
 * opaque; every entry point reports failures through an amg_status plus a
 * thread-local message readable via amg_last_error(). Strings returned
 * through char** are heap-allocated UTF-8 and must be released with
 * amg_string_free(). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct amg_group amg_group;
typedef struct amg_report amg_report;

typedef enum amg_status {
  AMG_OK = 0,
  AMG_ERR_INTERNAL = 1,
  AMG_ERR_PARSE = 2,
  AMG_ERR_VALIDATION = 3,
  AMG_ERR_BUDGET = 4,
  AMG_ERR_DISAGREEMENT = 5,
  AMG_HYPOTHESIS_NOT_MET = 6,
  AMG_ERR_ARGUMENT = 7
} amg_status;

/* Zero fields select the built-in defaults (max_order 4096, max_enum 128). */
typedef struct amg_limits {
  uint32_t max_order;
  uint32_t max_enum;
} amg_limits;

const char* amg_version(void);
const char* amg_status_name(amg_status status);
/* Message for the most recent failing call on this thread. */
const char* amg_last_error(void);

/* Parses and evaluates a spec such as "central(D(8), C(4); r^2 = y^2)". */
amg_status amg_group_create(const char* spec_text, const amg_limits* limits, amg_group** out);
void amg_group_free(amg_group* group);

uint32_t amg_group_order(const amg_group* group);
/* Comma-separated generator names of the evaluated group. */
amg_status amg_group_generators(const amg_group* group, char** out);

amg_status amg_group_classify(const amg_group* group, amg_report** out);
void amg_report_free(amg_report* report);
amg_status amg_report_render_text(const amg_report* report, char** out);
amg_status amg_report_render_json(const amg_report* report, char** out);

/* subgroup: comma-separated generator words, or "diag" for the diagonal of a
 * direct(X, X) spec. property: "normal" | "subnormal" | "abnormal".
 * method: "def" | "char" | "preimage" | "all" (default "all" when NULL).
 * The verdict text is produced even when the status is
 * AMG_HYPOTHESIS_NOT_MET; disagreements between methods come back as
 * AMG_ERR_DISAGREEMENT with both verdicts in amg_last_error(). */
amg_status amg_group_check(const amg_group* group, const char* subgroup, const char* property,
                           const char* method, char** out);

void amg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AMALGAM_C_API_H */
