#ifndef EWALL_H
#define EWALL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ew_context ew_context;

typedef enum {
    EW_OK = 0,
    EW_BAD_TYPE = 1,
    EW_BAD_WEIGHT = 2,
    EW_NODE_NOT_MINUSCULE = 3,
    EW_STRINGS_TOO_LONG = 4,
    EW_DATA_INVALID = 5,
    EW_WEIGHT_CONFLICT = 6,
    EW_NO_ISO = 7,
    EW_INCONSISTENT = 8,
    EW_TABLE_MISMATCH = 9,
    EW_DEPTH_OVERFLOW = 10,
    EW_IO = 11,
    EW_INTERNAL = 12,
    EW_USAGE = 13
} ew_status;

/* Formats are "dot", "json", "csv" or "text". Strings returned through char** are owned
   by the caller and released with ew_free_string. */

const char* ew_default_data_dir(void);
const char* ew_status_name(ew_status s);

/* data_dir may be NULL for the built-in data directory. */
ew_status ew_context_new(const char* data_dir, ew_context** out);
void ew_context_free(ew_context* ctx);
/* Message of the last failed call on ctx, empty after a success. */
const char* ew_last_error(const ew_context* ctx);

void ew_free_string(char* s);

/* what: "B", "C" or "BB". */
ew_status ew_build(ew_context* ctx, const char* type, const char* what, const char* format, char** out);

/* which: "ground", "energy", "sigma", "maximal" or "perfect". */
ew_status ew_tables(ew_context* ctx, const char* type, const char* which, const char* format, char** out);

typedef struct {
    const char* type;
    const char* lambda;   /* "L0" when NULL */
    const char* model;    /* "reduced", "fock", "path" or "fock-path"; "reduced" when NULL */
    int depth;
    int hw_only;
    const char* format;   /* "text" when NULL */
} ew_enumerate_options;

ew_status ew_enumerate(ew_context* ctx, const ew_enumerate_options* opts, char** out);

/* Runs the listed checks, or all of them when n_only is 0. */
ew_status ew_verify(ew_context* ctx, const char* const* only, size_t n_only, char** report_json,
                    char** summary, int* all_pass);

ew_status ew_column_show(ew_context* ctx, const char* type, const char* element, int shift, char** out);

ew_status ew_energy_dump(ew_context* ctx, const char* type, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
