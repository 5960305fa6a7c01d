#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace registra::corpus {

// A token is a nonempty, case-folded run of letters.
using Token = std::string;

std::vector<Token> tokenize(const std::string& raw_text);

struct Document {
    std::string id;
    std::string group;
    std::string topic;
    std::string raw_text;
    std::vector<Token> tokens; // always tokenize(raw_text)

    std::size_t word_count() const { return tokens.size(); }
};

struct ManifestEntry {
    std::string id;
    std::string path;
    std::string group;
    std::string topic;
};

struct Manifest {
    std::vector<std::string> groups;
    std::vector<ManifestEntry> texts;
    // Present when the manifest is a corpus cache carrying text inline.
    std::vector<std::string> inline_texts;
    bool has_inline_texts = false;
};

struct GroupSummary {
    std::size_t n_texts = 0;
    std::size_t total_words = 0;
    double mean_length = 0.0;
};

class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<Document> documents);

    const std::vector<Document>& documents() const { return docs_; }
    const std::vector<std::string>& group_labels() const { return group_labels_; }
    const std::vector<std::size_t>& group_members(const std::string& group) const;

    bool has_group(const std::string& group) const;
    GroupSummary group_summary(const std::string& group) const;
    GroupSummary corpus_summary() const;

    const Document& document(std::size_t index) const { return docs_[index]; }
    std::size_t size() const { return docs_.size(); }
    bool empty() const { return docs_.empty(); }

    // Documents restricted to the given groups, in manifest order.
    Corpus subset(const std::vector<std::string>& groups) const;

private:
    std::vector<Document> docs_;
    std::vector<std::string> group_labels_;          // declaration order
    std::map<std::string, std::vector<std::size_t>> groups_;
};

// Parses a manifest or a corpus cache file (JSON, UTF-8).
Manifest read_manifest(const std::string& path);

// Loads every entry, tokenizing as it goes. Paths in the manifest are
// resolved relative to the manifest file's directory.
Corpus load_corpus(const Manifest& manifest, const std::string& base_dir);
Corpus load_corpus_file(const std::string& manifest_path);

// Deterministic serialized corpus (stable field order); reloads through
// read_manifest/load_corpus.
std::string serialize_corpus(const Corpus& corpus);
void write_corpus_cache(const Corpus& corpus, const std::string& path);

// Convenience converter: TSV lines "id<TAB>path<TAB>group<TAB>topic".
Manifest manifest_from_tsv(const std::string& path);

} // namespace registra::corpus
