#ifndef HCOHOM_H
#define HCOHOM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HC_API __declspec(dllexport)
#else
#define HC_API __attribute__((visibility("default")))
#endif

typedef enum hc_status {
    HC_OK = 0,
    HC_ERR_INPUT = 2,
    HC_ERR_BUDGET = 3,
    HC_ERR_PRECONDITION = 4,
    HC_ERR_INTERNAL = 5,
    HC_ERR_NULL = 6
} hc_status;

typedef struct hc_algebra hc_algebra;

typedef struct hc_options {
    size_t max_degree;
    size_t size_budget; /* 0 selects HCOHOM_SIZE_BUDGET or the built-in default */
    int skip_certification;
} hc_options;

HC_API void hc_options_init(hc_options* opts);

/* Message for the last failing call on this thread; empty after success. */
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);

/* Builtin names: scalars, dual_numbers, matrix:<n>, upper_triangular:<n>, ... */
HC_API hc_status hc_algebra_builtin(const char* name, const char* field, hc_algebra** out);
HC_API hc_status hc_algebra_from_json(const char* json_text, hc_algebra** out);
/* A builtin name, inline JSON, or a file path. Comma lists build a direct sum. */
HC_API hc_status hc_algebra_resolve(const char* spec, const char* field, hc_algebra** out);
HC_API void hc_algebra_free(hc_algebra* a);
HC_API size_t hc_algebra_dim(const hc_algebra* a);
HC_API int hc_algebra_is_unital(const hc_algebra* a);
HC_API hc_status hc_algebra_to_json(const hc_algebra* a, char** out);
/* Handles are validated on construction; this reports the checks performed. */
HC_API hc_status hc_algebra_validate(const hc_algebra* a, char** out);

/* module: "dual", "regular", inline JSON or a file; NULL means "dual".
   subalgebra: NULL for absolute cohomology. */
HC_API hc_status hc_hochschild(const hc_algebra* a, const char* module, const char* subalgebra,
                               const hc_options* opts, char** out);
/* subalgebra: NULL means the span of the unit. */
HC_API hc_status hc_cyclic(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out);
HC_API hc_status hc_sbi(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out);
HC_API hc_status hc_connes_tsygan(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out);

/* case_json is a theorem case object; see hc_builtin_cases for examples. */
HC_API hc_status hc_verify(const char* case_json, const hc_options* opts, char** out);
/* cases_json: an array of cases, or NULL for the builtin regression set. */
HC_API hc_status hc_suite(const char* cases_json, const hc_options* opts, char** out);
HC_API hc_status hc_builtin_cases(char** out);
HC_API hc_status hc_builtin_algebra_names(char** out);

#ifdef __cplusplus
}
#endif

#endif
