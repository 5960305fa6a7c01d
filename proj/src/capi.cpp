#include "registra.h"

#include <cstring>
#include <new>
#include <string>

#include "registra/corpus.hpp"
#include "registra/errors.hpp"
#include "registra/report.hpp"

namespace {

thread_local std::string g_last_error;

registra_status fail(registra_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
registra_status guarded(Fn&& fn) {
    try {
        fn();
        return REGISTRA_OK;
    } catch (const registra::NumericalError& e) {
        return fail(REGISTRA_ERR_NUMERICAL, e.what());
    } catch (const registra::InputError& e) {
        return fail(REGISTRA_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(REGISTRA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(REGISTRA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(REGISTRA_ERR_INTERNAL, "unknown error");
    }
}

registra_status require(bool ok, const char* what) {
    return ok ? REGISTRA_OK : fail(REGISTRA_ERR_INPUT, what);
}

} // namespace

struct registra_corpus {
    registra::corpus::Corpus corpus;
};

extern "C" {

const char* registra_version(void) { return registra::report::tool_version().c_str(); }

const char* registra_last_error(void) { return g_last_error.c_str(); }

registra_status registra_corpus_load(const char* manifest_path, registra_corpus** out) {
    if (require(manifest_path && out, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    *out = nullptr;
    return guarded([&] {
        auto handle = new registra_corpus{registra::corpus::load_corpus_file(manifest_path)};
        *out = handle;
    });
}

void registra_corpus_free(registra_corpus* corpus) { delete corpus; }

registra_status registra_corpus_size(const registra_corpus* corpus, size_t* n_documents) {
    if (require(corpus && n_documents, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    *n_documents = corpus->corpus.size();
    return REGISTRA_OK;
}

registra_status registra_corpus_group_count(const registra_corpus* corpus, size_t* n_groups) {
    if (require(corpus && n_groups, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    *n_groups = corpus->corpus.group_labels().size();
    return REGISTRA_OK;
}

registra_status registra_corpus_group_name(const registra_corpus* corpus, size_t index,
                                           const char** name) {
    if (require(corpus && name, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    const auto& labels = corpus->corpus.group_labels();
    if (index >= labels.size()) return fail(REGISTRA_ERR_INPUT, "group index out of range");
    *name = labels[index].c_str();
    return REGISTRA_OK;
}

registra_status registra_corpus_group_summary(const registra_corpus* corpus, const char* group,
                                              size_t* n_texts, size_t* total_words,
                                              double* mean_length) {
    if (require(corpus && group, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    return guarded([&] {
        const auto s = corpus->corpus.group_summary(group);
        if (n_texts) *n_texts = s.n_texts;
        if (total_words) *total_words = s.total_words;
        if (mean_length) *mean_length = s.mean_length;
    });
}

registra_status registra_corpus_save_cache(const registra_corpus* corpus,
                                           const char* cache_path) {
    if (require(corpus && cache_path, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    return guarded([&] { registra::corpus::write_corpus_cache(corpus->corpus, cache_path); });
}

registra_status registra_tokenize(const char* text, char** tokens_out) {
    if (require(text && tokens_out, "null argument") != REGISTRA_OK) return REGISTRA_ERR_INPUT;
    *tokens_out = nullptr;
    return guarded([&] {
        auto tokens = registra::corpus::tokenize(text);
        std::string joined;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) joined += '\n';
            joined += tokens[i];
        }
        char* buf = new char[joined.size() + 1];
        std::memcpy(buf, joined.c_str(), joined.size() + 1);
        *tokens_out = buf;
    });
}

void registra_string_free(char* s) { delete[] s; }

registra_status registra_ingest(const char* manifest_path, const char* cache_path) {
    if (require(manifest_path && cache_path, "null argument") != REGISTRA_OK)
        return REGISTRA_ERR_INPUT;
    return guarded([&] {
        auto corpus = registra::corpus::load_corpus_file(manifest_path);
        registra::corpus::write_corpus_cache(corpus, cache_path);
    });
}

registra_status registra_run(const char* command, const char* config_path,
                             const char* out_override) {
    if (require(command && config_path, "null argument") != REGISTRA_OK)
        return REGISTRA_ERR_INPUT;
    return guarded([&] {
        using namespace registra::report;
        AnalysisConfig config = AnalysisConfig::from_file(config_path);
        const std::string cmd = command;
        if (cmd == "ingest") {
            const std::string cache = out_override ? out_override : config.out_dir;
            run_ingest(config, cache);
            return;
        }
        if (out_override) config.out_dir = out_override;
        if (cmd == "fwpca") run_fwpca(config);
        else if (cmd == "mda") run_mda(config);
        else if (cmd == "pos") run_pos_contrast(config);
        else if (cmd == "profile") run_content_profile(config);
        else if (cmd == "compare") run_compare(config);
        else if (cmd == "generate") run_generate(config);
        else throw registra::InputError("unknown command: " + cmd);
    });
}

} // extern "C"
