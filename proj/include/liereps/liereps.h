/* C interface to the liereps library. All strings are UTF-8 and owned by the
 * handle they come from. Functions returning lr_status leave a message for
 * lr_last_error() on failure (per thread). */
#ifndef LIEREPS_H
#define LIEREPS_H

#include <stddef.h>

#if defined(_WIN32)
#define LR_API __declspec(dllexport)
#else
#define LR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lr_status {
  LR_OK = 0,
  LR_ERR_USAGE = 1,
  LR_ERR_VALIDATION = 2,
  LR_ERR_INTERNAL = 3
} lr_status;

typedef struct lr_input lr_input;
typedef struct lr_report lr_report;

#define LR_SELFTEST_CORRUPT_CATALOG 1u

LR_API const char* lr_version(void);
LR_API const char* lr_last_error(void);

LR_API lr_status lr_input_parse(const char* json_text, lr_input** out);
LR_API lr_status lr_input_load(const char* path, lr_input** out);
LR_API void lr_input_free(lr_input* input);

/* q and sample_q are decimal strings; q may be NULL. */
LR_API lr_status lr_analyze(const lr_input* input, const char* q, const char* const* sample_q,
                            size_t n_samples, lr_report** out);
/* isogeny: "sc", "adjoint", "SO", "HSpin" or "e=N". */
LR_API lr_status lr_catalog(char type, size_t rank, const char* isogeny, int epsilon,
                            const char* q, lr_report** out);
LR_API lr_status lr_enumerate(const lr_input* input, const char* q, size_t limit,
                              lr_report** out);
LR_API lr_status lr_selftest(unsigned flags, lr_report** out);

LR_API const char* lr_report_text(const lr_report* report);
LR_API const char* lr_report_json(const lr_report* report);
/* Decimal total, or "" when the report has none. */
LR_API const char* lr_report_total(const lr_report* report);
/* 0 when a self-check inside the report failed. */
LR_API int lr_report_ok(const lr_report* report);
LR_API void lr_report_free(lr_report* report);

#ifdef __cplusplus
}
#endif

#endif
