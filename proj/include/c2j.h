/* C interface to the c2j translation harness.
 *
 * Everything stateful hangs off an opaque c2j_session. Calls return a
 * c2j_status; on any nonzero status c2j_last_error() holds a message that
 * stays valid until the next call on the same session. Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * c2j_string_free().
 */
#ifndef C2J_H
#define C2J_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c2j_status {
  C2J_OK = 0,
  C2J_E_PARSE = 1,     /* syntax error or unsupported construct */
  C2J_E_TRANSLATE = 2, /* translation, sanitizing or assembly failure */
  C2J_E_CONFIG = 3,    /* bad configuration or arguments */
  C2J_E_BACKEND = 4,   /* backend connection, timeout, unknown model */
  C2J_E_INFRA = 5,     /* missing toolchain or io failure */
  C2J_E_INTERNAL = 6
} c2j_status;

typedef struct c2j_session c2j_session;

c2j_session* c2j_session_new(void);
void c2j_session_free(c2j_session* session);
const char* c2j_last_error(const c2j_session* session);

/* Loads a run configuration from a json file; NULL path loads defaults.
 * C2J_CC / C2J_JAVAC / C2J_JAVA override toolchain commands either way. */
c2j_status c2j_load_config(c2j_session* session, const char* path_or_null);
c2j_status c2j_config_to_json(c2j_session* session, char** out_json);

/* Decomposition summary of one C file plus the applicable rule ids.
 * as_json selects machine-readable output. */
c2j_status c2j_analyze_file(c2j_session* session, const char* c_path,
                            int as_json, char** out_text);

/* Translates one C file with the named backend, writing <stem>.java under
 * out_dir. out_reports_json receives the per-part sanitizer reports. Either
 * out pointer may be NULL. */
c2j_status c2j_translate_file(c2j_session* session, const char* c_path,
                              const char* backend_name, const char* out_dir,
                              char** out_java_path, char** out_reports_json);

/* Differential verification of a C file against a Java file. *out_pass is 1
 * only for a byte-identical stdout match. A completed verification returns
 * C2J_OK regardless of the verdict. */
c2j_status c2j_verify_files(c2j_session* session, const char* c_path,
                            const char* java_path, char** out_verdict_json,
                            int* out_pass);

/* Runs the backend x corpus matrix. backends_csv narrows the run to a
 * comma-separated subset of configured backends; NULL runs them all.
 * Reports and per-cell artifacts land under the configured output_dir.
 * *out_infra_clean is 1 when no cell is an InfraError. */
c2j_status c2j_bench(c2j_session* session, const char* backends_csv,
                     char** out_matrix_json, int* out_infra_clean);

/* Renders a matrix json document as "csv", "json" or "markdown". */
c2j_status c2j_render_report(c2j_session* session, const char* matrix_json,
                             const char* format, char** out_text);

void c2j_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* C2J_H */
