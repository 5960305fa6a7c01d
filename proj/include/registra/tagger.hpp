#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "registra/corpus.hpp"

namespace registra::tagger {

// Penn-Treebank-style tag set used by the built-in tagger and by tagged-file
// ingestion. Punctuation tags: . , : ( ) `` '' SYM $ #
const std::vector<std::string>& tag_set();
bool is_valid_tag(const std::string& tag);
bool is_punct_tag(const std::string& tag);

struct TaggedToken {
    std::string surface;
    std::string tag;
};

struct TagStream {
    std::string doc_id;
    std::vector<TaggedToken> tokens;

    // Tokens that count toward per-100-word rates (punctuation excluded).
    std::size_t word_token_count() const;
};

// The tagger's own tokenization: whitespace/punctuation splitting that keeps
// clitics ('s, n't, 're, ...) as separate tokens. Distinct from
// corpus::tokenize, which destroys the punctuation context POS rules need.
std::vector<std::string> tagger_tokenize(const std::string& text);

class Tagger {
public:
    // Loads the bundled lexicon (word<TAB>tag[ tag...]) from the data
    // directory; first tag is the default, the rest license context moves.
    static Tagger from_file(const std::string& lexicon_path);

    TagStream tag_text(const std::string& doc_id, const std::string& text) const;
    TagStream tag(const corpus::Document& doc) const;

private:
    std::unordered_map<std::string, std::vector<std::string>> lexicon_;

    std::string lookup_or_guess(const std::string& token, bool sentence_initial) const;
    bool has_tag(const std::string& word, const std::string& tag) const;
    void apply_context_rules(std::vector<TaggedToken>& toks) const;
};

// token<TAB>tag per line, blank line between sentences, # comments ignored.
TagStream ingest_tagged(const std::string& path);
std::string export_tagged(const TagStream& stream);

// The 20 feature codes, in report/CSV column order.
constexpr std::size_t kBiberFeatureCount = 20;
const std::array<std::string, kBiberFeatureCount>& biber_feature_codes();

struct BiberFeatureVector {
    std::string doc_id;
    std::array<std::size_t, kBiberFeatureCount> counts{};
    std::size_t word_count = 0;

    double rate_per_100(std::size_t feature) const; // occurrences per 100 words
    std::size_t count_of(const std::string& code) const;
    double rate_of(const std::string& code) const;
};

// Word lists backing the feature rules; all user-overridable files.
struct FeatureRuleData {
    std::unordered_set<std::string> private_verbs; // inflected forms
    std::unordered_set<std::string> prepositions;
    std::unordered_set<std::string> third_person_pronouns;

    static FeatureRuleData from_dir(const std::string& data_dir);
};

BiberFeatureVector extract_biber_features(const TagStream& stream, const FeatureRuleData& rules);

// The 8 contrast tags reported per 1,000 words, in display order.
constexpr std::size_t kWordClassCount = 8;
const std::array<std::string, kWordClassCount>& word_class_labels();

struct WordClassProfile {
    std::string group;
    std::array<double, kWordClassCount> rates_per_1000{};
};

WordClassProfile word_class_profile(const std::vector<BiberFeatureVector>& vectors,
                                    const std::string& group);

// CSV per External Interfaces: doc_id, group, then the 20 feature codes,
// rates at six decimals.
std::string feature_vectors_csv(const std::vector<BiberFeatureVector>& vectors,
                                const std::vector<std::string>& groups);

} // namespace registra::tagger
