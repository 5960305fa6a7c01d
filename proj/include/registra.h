/* registra -- corpus stylometry toolkit, C API.
 *
 * All functions return a registra_status; on failure the thread-local
 * message from registra_last_error() describes what went wrong. Objects
 * returned through out-parameters are owned by the caller and released
 * with the matching _free function.
 */

#ifndef REGISTRA_H
#define REGISTRA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define REGISTRA_API __declspec(dllexport)
#else
#define REGISTRA_API __attribute__((visibility("default")))
#endif

typedef enum registra_status {
    REGISTRA_OK = 0,
    REGISTRA_ERR_INPUT = 1,     /* bad files, config, data, or arguments */
    REGISTRA_ERR_NUMERICAL = 2, /* degenerate data or solver failure */
    REGISTRA_ERR_INTERNAL = 3
} registra_status;

REGISTRA_API const char* registra_version(void);

/* Message for the most recent failure on this thread; never NULL. */
REGISTRA_API const char* registra_last_error(void);

/* ---- corpus handles ---------------------------------------------------- */

typedef struct registra_corpus registra_corpus;

REGISTRA_API registra_status registra_corpus_load(const char* manifest_path,
                                                  registra_corpus** out);
REGISTRA_API void registra_corpus_free(registra_corpus* corpus);

REGISTRA_API registra_status registra_corpus_size(const registra_corpus* corpus,
                                                  size_t* n_documents);
REGISTRA_API registra_status registra_corpus_group_count(const registra_corpus* corpus,
                                                         size_t* n_groups);
REGISTRA_API registra_status registra_corpus_group_name(const registra_corpus* corpus,
                                                        size_t index,
                                                        const char** name);
REGISTRA_API registra_status registra_corpus_group_summary(const registra_corpus* corpus,
                                                           const char* group,
                                                           size_t* n_texts,
                                                           size_t* total_words,
                                                           double* mean_length);
REGISTRA_API registra_status registra_corpus_save_cache(const registra_corpus* corpus,
                                                        const char* cache_path);

/* Tokenizes UTF-8 text into a newline-separated token list. Free the
 * result with registra_string_free. */
REGISTRA_API registra_status registra_tokenize(const char* text, char** tokens_out);
REGISTRA_API void registra_string_free(char* s);

/* ---- analysis commands -------------------------------------------------- */

/* command: one of "ingest", "fwpca", "mda", "pos", "profile", "compare",
 * "generate". config_path names the JSON analysis config. out_override,
 * when non-NULL, replaces the config's output directory (for "ingest" it
 * names the corpus cache file). */
REGISTRA_API registra_status registra_run(const char* command,
                                          const char* config_path,
                                          const char* out_override);

/* Manifest -> deterministic corpus cache, without an analysis config. */
REGISTRA_API registra_status registra_ingest(const char* manifest_path,
                                             const char* cache_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REGISTRA_H */
