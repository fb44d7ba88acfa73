#ifndef MACE4_MACE4_H
#define MACE4_MACE4_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MACE4_API __declspec(dllexport)
#else
#define MACE4_API __attribute__((visibility("default")))
#endif

/* Status codes returned by every function that can fail. */
typedef enum mace4_status {
  MACE4_OK = 0,
  MACE4_ERR_INVALID_ARGUMENT = 1,
  MACE4_ERR_PARSE = 2,
  MACE4_ERR_USAGE = 3,
  MACE4_ERR_FATAL = 4,
  MACE4_ERR_MEMORY = 5,
  MACE4_ERR_STATE = 6
} mace4_status;

/* Output callback. Receives chunks of text; not NUL-terminated. */
typedef void (*mace4_write_fn)(void* user, const char* data, size_t len);

/* Message describing the most recent failure on the calling thread. */
MACE4_API const char* mace4_last_error(void);

MACE4_API const char* mace4_version(void);

/* ---- search sessions ---------------------------------------------------- */

typedef struct mace4_session mace4_session;

MACE4_API mace4_session* mace4_session_create(void);
MACE4_API void mace4_session_destroy(mace4_session* session);

/* Command-line style overrides such as "-n8" "-m" "20" "-c". */
MACE4_API mace4_status mace4_session_set_args(mace4_session* session, int argc,
                                              const char* const* argv);

/* Input file text: commands plus clause and formula lists. */
MACE4_API mace4_status mace4_session_load(mace4_session* session, const char* text, size_t len);

/* Runs the search, streaming output to `write`. On MACE4_OK, *exit_code is
   0 (max_models reached), 1 (fatal), 2 (no models), 3 (all models found),
   4 (time limit with models) or 5 (time limit without models). */
MACE4_API mace4_status mace4_session_run(mace4_session* session, mace4_write_fn write, void* user,
                                         int* exit_code);

/* Models found by the last run. */
MACE4_API long long mace4_session_models(const mace4_session* session);

MACE4_API const char* mace4_session_last_error(const mace4_session* session);

/* ---- interpretation streams --------------------------------------------- */

typedef struct mace4_interps mace4_interps;

/* Parses every interpretation(...) item embedded in the text. */
MACE4_API mace4_interps* mace4_interps_parse(const char* text, size_t len);
MACE4_API void mace4_interps_destroy(mace4_interps* interps);
MACE4_API size_t mace4_interps_count(const mace4_interps* interps);
MACE4_API int mace4_interps_domain_size(const mace4_interps* interps, size_t index);

/* *result is 1 when the two interpretations are isomorphic, else 0. */
MACE4_API mace4_status mace4_interps_isomorphic(const mace4_interps* interps, size_t a, size_t b,
                                                int* result);

/* Writes one interpretation in portable (portable != 0) or standard form. */
MACE4_API mace4_status mace4_interps_print(const mace4_interps* interps, size_t index,
                                           int portable, mace4_write_fn write, void* user);

/* ---- stream tools ------------------------------------------------------- */

/* 1 if `name` is a subcommand: help, get-interps, isofilter, modfilter,
   modtester, interpfilter, oracle-count (underscores accepted). */
MACE4_API int mace4_is_tool(const char* name);

/* Runs a subcommand over `input` with positional arguments. *exit_code is
   the process exit code; failures also set mace4_last_error(). */
MACE4_API mace4_status mace4_tool_run(const char* name, int argc, const char* const* argv,
                                      const char* input, size_t input_len, mace4_write_fn write,
                                      void* user, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
