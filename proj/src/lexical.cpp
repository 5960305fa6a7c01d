#include "registra/lexical.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "registra/errors.hpp"
#include "registra/format.hpp"

namespace registra::lexical {

double FrequencyTable::normalized(const std::string& word) const {
    auto it = counts.find(word);
    if (it == counts.end() || total_words == 0) return 0.0;
    return 1000.0 * static_cast<double>(it->second) / static_cast<double>(total_words);
}

namespace {

void accumulate(FrequencyTable& t, const corpus::Document& d) {
    for (const auto& tok : d.tokens) ++t.counts[tok];
    t.total_words += d.word_count();
}

} // namespace

FrequencyTable count_corpus(const corpus::Corpus& c) {
    FrequencyTable t;
    t.scope = "corpus";
    for (const auto& d : c.documents()) accumulate(t, d);
    return t;
}

FrequencyTable count_group(const corpus::Corpus& c, const std::string& group) {
    FrequencyTable t;
    t.scope = "group";
    for (std::size_t i : c.group_members(group)) accumulate(t, c.document(i));
    return t;
}

FrequencyTable count_document(const corpus::Document& d) {
    FrequencyTable t;
    t.scope = "document";
    accumulate(t, d);
    return t;
}

std::vector<RankedWord> rank_words(const corpus::Corpus& c, std::size_t top_n) {
    if (c.empty()) throw InputError("rank_words: empty corpus");
    if (top_n < 1) throw InputError("rank_words: top_n must be at least 1");
    FrequencyTable t = count_corpus(c);
    std::vector<RankedWord> ranked;
    ranked.reserve(t.counts.size());
    for (const auto& [word, count] : t.counts) {
        ranked.push_back({word,
                          1000.0 * static_cast<double>(count) / static_cast<double>(t.total_words),
                          count});
    }
    // Descending count; the map already yields words alphabetically, and
    // stable_sort keeps that order among ties.
    std::stable_sort(ranked.begin(), ranked.end(), [](const RankedWord& a, const RankedWord& b) {
        return a.raw_count > b.raw_count;
    });
    if (ranked.size() > top_n) ranked.resize(top_n);
    return ranked;
}

FunctionWordLexicon FunctionWordLexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open lexicon file: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t");
        words.push_back(line.substr(a, b - a + 1));
    }
    return from_words(std::move(words));
}

FunctionWordLexicon FunctionWordLexicon::from_words(std::vector<std::string> words) {
    FunctionWordLexicon lex;
    lex.words_.insert(words.begin(), words.end());
    return lex;
}

FeatureSet select_function_words(const std::vector<RankedWord>& ranked,
                                 const FunctionWordLexicon& lexicon,
                                 double min_rate_per_1000,
                                 const std::string& lexicon_id) {
    if (min_rate_per_1000 < 0) throw InputError("select_function_words: negative min rate");
    FeatureSet fs;
    fs.top_n = ranked.size();
    fs.min_rate_per_1000 = min_rate_per_1000;
    fs.lexicon_id = lexicon_id;
    for (const auto& r : ranked) {
        if (r.rate_per_1000 >= min_rate_per_1000 && lexicon.contains(r.word))
            fs.words.push_back(r.word);
    }
    if (fs.words.empty())
        throw InputError("select_function_words: no function words selected "
                         "(corpus/lexicon mismatch or threshold too high)");
    return fs;
}

FeatureMatrix build_feature_matrix(const corpus::Corpus& c, const FeatureSet& features) {
    if (features.words.empty()) throw InputError("build_feature_matrix: empty feature set");
    FeatureMatrix m;
    m.features = features.words;
    m.unit = Unit::PerThousandWords;
    for (const auto& d : c.documents()) {
        if (d.word_count() == 0)
            throw InputError("build_feature_matrix: document \"" + d.id + "\" has no words");
        std::map<std::string, std::size_t> counts;
        for (const auto& tok : d.tokens) {
            ++counts[tok];
        }
        std::vector<double> row;
        row.reserve(m.features.size());
        for (const auto& w : m.features) {
            auto it = counts.find(w);
            double count = it == counts.end() ? 0.0 : static_cast<double>(it->second);
            row.push_back(1000.0 * count / static_cast<double>(d.word_count()));
        }
        m.doc_ids.push_back(d.id);
        m.doc_groups.push_back(d.group);
        m.values.push_back(std::move(row));
    }
    return m;
}

ContentWordProfile content_word_profile(const corpus::Corpus& c,
                                        std::size_t top_n,
                                        const FunctionWordLexicon& lexicon) {
    std::vector<RankedWord> ranked = rank_words(c, top_n);
    ContentWordProfile p;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        ProfiledWord w;
        w.word = ranked[i].word;
        w.rank = i + 1;
        w.rate_per_1000 = ranked[i].rate_per_1000;
        w.is_content = !lexicon.contains(w.word);
        if (w.is_content) {
            ++p.content_count;
            if (p.first_content_rank == 0) {
                p.first_content_rank = w.rank;
                p.first_content_word = w.word;
            }
        }
        p.words.push_back(std::move(w));
    }
    return p;
}

std::string feature_matrix_csv(const FeatureMatrix& m) {
    std::ostringstream out;
    out << "doc_id,group";
    for (const auto& f : m.features) out << ',' << csv_quote(f);
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << csv_quote(m.doc_ids[r]) << ',' << csv_quote(m.doc_groups[r]);
        for (double v : m.values[r]) out << ',' << format_fixed(v, 6);
        out << '\n';
    }
    return out.str();
}

} // namespace registra::lexical
