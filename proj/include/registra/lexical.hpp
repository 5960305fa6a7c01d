#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "registra/corpus.hpp"

namespace registra::lexical {

struct FrequencyTable {
    std::string scope; // "corpus" | "group" | "document"
    std::map<std::string, std::size_t> counts;
    std::size_t total_words = 0;

    double normalized(const std::string& word) const; // rate per 1,000 words
};

FrequencyTable count_corpus(const corpus::Corpus& c);
FrequencyTable count_group(const corpus::Corpus& c, const std::string& group);
FrequencyTable count_document(const corpus::Document& d);

struct RankedWord {
    std::string word;
    double rate_per_1000;
    std::size_t raw_count;
};

// Top-n words by descending corpus-wide normalized rate, ties alphabetical.
std::vector<RankedWord> rank_words(const corpus::Corpus& c, std::size_t top_n);

class FunctionWordLexicon {
public:
    static FunctionWordLexicon from_file(const std::string& path);
    static FunctionWordLexicon from_words(std::vector<std::string> words);

    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::set<std::string> words_;
};

struct FeatureSet {
    std::vector<std::string> words; // rank order
    std::size_t top_n = 0;
    double min_rate_per_1000 = 0.0;
    std::string lexicon_id;
};

FeatureSet select_function_words(const std::vector<RankedWord>& ranked,
                                 const FunctionWordLexicon& lexicon,
                                 double min_rate_per_1000,
                                 const std::string& lexicon_id = "default");

enum class Unit { PerThousandWords, PerHundredWords };

struct FeatureMatrix {
    std::vector<std::string> doc_ids;
    std::vector<std::string> doc_groups;
    std::vector<std::string> features;
    std::vector<std::vector<double>> values; // rows x features
    Unit unit = Unit::PerThousandWords;

    std::size_t rows() const { return values.size(); }
    std::size_t cols() const { return features.size(); }
};

FeatureMatrix build_feature_matrix(const corpus::Corpus& c, const FeatureSet& features);

struct ProfiledWord {
    std::string word;
    std::size_t rank; // 1-based
    double rate_per_1000;
    bool is_content;
};

struct ContentWordProfile {
    std::vector<ProfiledWord> words;
    std::size_t content_count = 0;
    std::size_t first_content_rank = 0; // 0 when none
    std::string first_content_word;
};

ContentWordProfile content_word_profile(const corpus::Corpus& c,
                                        std::size_t top_n,
                                        const FunctionWordLexicon& lexicon);

// CSV per External Interfaces: doc_id, group, then feature columns at six
// decimal places, rows in manifest order.
std::string feature_matrix_csv(const FeatureMatrix& m);

} // namespace registra::lexical
