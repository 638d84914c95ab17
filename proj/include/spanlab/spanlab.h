/* C interface to the spanlab core. All functions return sl_status; on any
 * nonzero status sl_last_error() holds a thread-local message. Strings
 * returned through char** are heap-allocated; release with sl_string_free. */
#ifndef SPANLAB_SPANLAB_H
#define SPANLAB_SPANLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
    SL_OK = 0,
    SL_ERR_IO = 1,
    SL_ERR_PARSE = 2,
    SL_ERR_CONFIG = 3,
    SL_ERR_INVALID = 4,
    SL_ERR_UNSUPPORTED = 5,
    SL_ERR_NOT_IMPLEMENTED = 6,
    SL_ERR_INTERNAL = 7
} sl_status;

/* Message for the most recent failure on this thread; empty string if none. */
const char* sl_last_error(void);
void sl_string_free(char* s);

/* --- opaque handles --------------------------------------------------- */

typedef struct sl_config sl_config;
typedef struct sl_corpus sl_corpus;
typedef struct sl_model sl_model;

/* Config starts from built-in defaults; file load and set() overlay it. */
sl_status sl_config_create(sl_config** out);
sl_status sl_config_load_file(sl_config* cfg, const char* path);
sl_status sl_config_set(sl_config* cfg, const char* key, const char* value);
sl_status sl_config_dump(const sl_config* cfg, char** out);
void sl_config_free(sl_config* cfg);

sl_status sl_corpus_load(const char* path, sl_corpus** out);
sl_status sl_corpus_save(const sl_corpus* corpus, const char* path);
sl_status sl_corpus_size(const sl_corpus* corpus, size_t* out);
void sl_corpus_free(sl_corpus* corpus);

sl_status sl_model_load(const char* path, sl_model** out);
sl_status sl_model_save(const sl_model* model, const char* path);
void sl_model_free(sl_model* model);

/* --- subcommand-grain operations -------------------------------------- */

/* JSON-lines raw posts -> normalized, tokenized corpus file. */
sl_status sl_preprocess(const sl_config* cfg, const char* input_jsonl,
                        const char* output_corpus, char** summary);

sl_status sl_stats(const sl_corpus* corpus, char** report);

/* Inter-annotator agreement over the annotator columns. */
sl_status sl_agreement(const sl_corpus* corpus, char** report);

/* Writes <prefix>.train / .dev / .test. */
sl_status sl_split(const sl_corpus* corpus, const sl_config* cfg,
                   const char* output_prefix, char** summary);

sl_status sl_train(const sl_corpus* train_set, const sl_corpus* dev_set,
                   const sl_config* cfg, const char* model_out, char** log);

sl_status sl_grid(const sl_corpus* train_set, const sl_corpus* dev_set,
                  const sl_config* cfg, char** table);

sl_status sl_eval(const sl_model* model, const sl_corpus* corpus,
                  const sl_config* cfg, char** report);

sl_status sl_crossdomain(const sl_corpus* train_set, const sl_corpus* test_set,
                         const sl_config* cfg, char** matrix);

/* Writes predictions as a corpus file (gold column replaced). */
sl_status sl_predict(const sl_model* model, const sl_corpus* corpus,
                     const sl_config* cfg, const char* output_corpus,
                     char** summary);

/* format: "ansi" or "html". mode: "ig" (integrated gradients), "attention",
 * or "spans" (decoded span highlights). */
sl_status sl_explain(const sl_model* model, const sl_corpus* corpus,
                     const sl_config* cfg, const char* mode, const char* format,
                     char** report);

sl_status sl_augment(const sl_corpus* corpus, const sl_config* cfg,
                     const char* output_corpus, char** summary);

sl_status sl_synth(const sl_config* cfg, const char* output_corpus,
                   char** summary);

#ifdef __cplusplus
}
#endif

#endif /* SPANLAB_SPANLAB_H */
