#include <doctest.h>

#include <cmath>
#include <random>

#include "registra/corpus.hpp"
#include "registra/errors.hpp"
#include "registra/lexical.hpp"

using namespace registra;

namespace {

corpus::Document make_doc(const std::string& id, const std::string& group,
                          const std::string& text) {
    corpus::Document d;
    d.id = id;
    d.group = group;
    d.raw_text = text;
    d.tokens = corpus::tokenize(text);
    return d;
}

corpus::Corpus make_corpus(std::vector<std::pair<std::string, std::string>> texts) {
    std::vector<corpus::Document> docs;
    int i = 0;
    for (auto& [group, text] : texts) {
        docs.push_back(make_doc("d" + std::to_string(i++), group, text));
    }
    return corpus::Corpus(std::move(docs));
}

lexical::FunctionWordLexicon default_lexicon() {
    return lexical::FunctionWordLexicon::from_file(
        std::string(REGISTRA_TEST_DATA_DIR) + "/function_words.txt");
}

} // namespace

TEST_CASE("rank_words orders by rate with alphabetical tie-break") {
    auto c = make_corpus({{"G", "a a b"}});
    auto ranked = lexical::rank_words(c, 2);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].word == "a");
    CHECK(ranked[0].rate_per_1000 == doctest::Approx(666.6666667));
    CHECK(ranked[1].word == "b");
    CHECK(ranked[1].rate_per_1000 == doctest::Approx(333.3333333));

    SUBCASE("ties break alphabetically") {
        auto tie = make_corpus({{"G", "zeta alpha zeta alpha mid"}});
        auto r = lexical::rank_words(tie, 3);
        CHECK(r[0].word == "alpha");
        CHECK(r[1].word == "zeta");
        CHECK(r[2].word == "mid");
    }
    SUBCASE("empty corpus is an error") {
        corpus::Corpus empty;
        CHECK_THROWS_AS(lexical::rank_words(empty, 5), InputError);
    }
}

TEST_CASE("normalized rates sum to 1000 at every scope") {
    auto c = make_corpus({{"A", "the cat sat on the mat"},
                          {"A", "a dog and a cat"},
                          {"B", "the end"}});
    for (const auto& scope : {lexical::count_corpus(c), lexical::count_group(c, "A"),
                              lexical::count_document(c.document(0))}) {
        double sum = 0.0;
        for (const auto& [word, count] : scope.counts) sum += scope.normalized(word);
        CHECK(sum == doctest::Approx(1000.0).epsilon(1e-12));
    }
}

TEST_CASE("select_function_words filters by lexicon and threshold") {
    auto lexicon = lexical::FunctionWordLexicon::from_words({"the", "of"});

    std::vector<lexical::RankedWord> ranked = {
        {"the", 30.0, 30}, {"life", 3.0, 3}, {"of", 2.5, 2}};
    auto fs = lexical::select_function_words(ranked, lexicon, 2.0);
    CHECK(fs.words == std::vector<std::string>{"the", "of"});
    CHECK(fs.min_rate_per_1000 == 2.0);

    SUBCASE("below-threshold lexicon words are dropped") {
        std::vector<lexical::RankedWord> r2 = {{"the", 30.0, 30}, {"of", 1.5, 1}};
        auto fs2 = lexical::select_function_words(r2, lexicon, 2.0);
        CHECK(fs2.words == std::vector<std::string>{"the"});
    }
    SUBCASE("no function words is a selection error") {
        std::vector<lexical::RankedWord> content = {
            {"cat", 5.0, 5}, {"dog", 4.0, 4}, {"run", 3.0, 3}};
        CHECK_THROWS_AS(lexical::select_function_words(content, lexicon, 2.0), InputError);
    }
    SUBCASE("output is a subset of input and lexicon") {
        auto big = default_lexicon();
        std::vector<lexical::RankedWord> mixed = {
            {"the", 30.0, 30}, {"and", 25.0, 25}, {"people", 5.0, 5}, {"water", 2.0, 2}};
        auto sel = lexical::select_function_words(mixed, big, 2.0);
        for (const auto& w : sel.words) {
            CHECK(big.contains(w));
            bool in_input = false;
            for (const auto& r : mixed) in_input |= r.word == w;
            CHECK(in_input);
        }
        CHECK(sel.words == std::vector<std::string>{"the", "and"});
    }
}

TEST_CASE("the bundled lexicon contains all 27 FW-PCA set words and no content words") {
    auto lexicon = default_lexicon();
    const std::vector<std::string> table1 = {
        "the", "and", "of", "to", "in", "a", "is", "that", "for", "as", "are", "it",
        "with", "or", "on", "can", "this", "by", "be", "s", "their", "have", "from",
        "they", "an", "has", "not"};
    for (const auto& w : table1) {
        CAPTURE(w);
        CHECK(lexicon.contains(w));
    }
    for (const auto& w : {"people", "other", "water", "ethical", "life", "education",
                          "important", "quickly", "study"}) {
        CAPTURE(w);
        CHECK_FALSE(lexicon.contains(w));
    }
}

TEST_CASE("build_feature_matrix computes per-1000 rates with absent features as zero") {
    auto c = make_corpus({{"G", "the cat the"}, {"G", "dog dog dog dog"}});
    lexical::FeatureSet fs;
    fs.words = {"the", "missing"};
    auto m = lexical::build_feature_matrix(c, fs);
    REQUIRE(m.rows() == 2);
    CHECK(m.values[0][0] == doctest::Approx(666.6666667));
    CHECK(m.values[0][1] == 0.0);
    CHECK(m.values[1][0] == 0.0);

    SUBCASE("a zero-word document is an error naming the document") {
        auto bad = make_corpus({{"G", "words here"}, {"G", "!!!"}});
        CHECK_THROWS_WITH_AS(lexical::build_feature_matrix(bad, fs),
                             doctest::Contains("d1"), InputError);
    }
    SUBCASE("empty feature set is an error") {
        lexical::FeatureSet empty;
        CHECK_THROWS_AS(lexical::build_feature_matrix(c, empty), InputError);
    }
}

TEST_CASE("feature matrix rates match an independent hand count on a toy corpus") {
    // Fixture: three documents with hand-counted rates.
    auto c = make_corpus({{"A", "the cat and the dog"},          // the:2/5, and:1/5
                          {"A", "a dog barks and runs and hides"}, // and:2/7
                          {"B", "the end of the story of all"}}); // the:2/7, of:2/7
    lexical::FeatureSet fs;
    fs.words = {"the", "and", "of"};
    auto m = lexical::build_feature_matrix(c, fs);
    CHECK(m.values[0][0] == doctest::Approx(1000.0 * 2 / 5));
    CHECK(m.values[0][1] == doctest::Approx(1000.0 * 1 / 5));
    CHECK(m.values[0][2] == doctest::Approx(0.0));
    CHECK(m.values[1][0] == doctest::Approx(0.0));
    CHECK(m.values[1][1] == doctest::Approx(1000.0 * 2 / 7));
    CHECK(m.values[2][0] == doctest::Approx(1000.0 * 2 / 7));
    CHECK(m.values[2][2] == doctest::Approx(1000.0 * 2 / 7));
}

TEST_CASE("feature rows are invariant under duplication elsewhere and text repetition") {
    auto base = make_corpus({{"A", "the cat and the dog"}, {"B", "other words entirely"}});
    lexical::FeatureSet fs;
    fs.words = {"the", "and"};
    auto m1 = lexical::build_feature_matrix(base, fs);

    SUBCASE("duplicating another document does not change a row") {
        auto bigger = make_corpus({{"A", "the cat and the dog"},
                                   {"B", "other words entirely"},
                                   {"B", "other words entirely"}});
        auto m2 = lexical::build_feature_matrix(bigger, fs);
        CHECK(m2.values[0] == m1.values[0]);
    }
    SUBCASE("repeating a document's text k times leaves its row unchanged") {
        std::string thrice;
        for (int i = 0; i < 3; ++i) thrice += "the cat and the dog ";
        auto rep = make_corpus({{"A", thrice}, {"B", "other words entirely"}});
        auto m3 = lexical::build_feature_matrix(rep, fs);
        for (std::size_t j = 0; j < fs.words.size(); ++j) {
            CHECK(m3.values[0][j] == doctest::Approx(m1.values[0][j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("content_word_profile annotates ranks and finds the first content word") {
    auto lexicon = default_lexicon();
    auto c = make_corpus(
        {{"G", "the the the of of cat the of and and dog the cat cat of and"}});
    auto p = lexical::content_word_profile(c, 5, lexicon);
    REQUIRE(p.words.size() == 5);
    CHECK(p.words[0].word == "the");
    CHECK_FALSE(p.words[0].is_content);
    // the(5) of(4) and(3) cat(3) dog(1); and/cat tie broken alphabetically
    CHECK(p.content_count == 2); // cat, dog
    CHECK(p.first_content_word == "cat");
    CHECK(p.first_content_rank == 4);

    SUBCASE("pure function-word corpus has zero content words") {
        auto fw = make_corpus({{"G", "the of and to in a is that for as"}});
        auto p2 = lexical::content_word_profile(fw, 10, lexicon);
        CHECK(p2.content_count == 0);
        CHECK(p2.first_content_rank == 0);
    }
}

TEST_CASE("feature_matrix_csv is deterministic with 6-decimal values") {
    auto c = make_corpus({{"A", "the cat"}, {"B", "the dog"}});
    lexical::FeatureSet fs;
    fs.words = {"the"};
    auto m = lexical::build_feature_matrix(c, fs);
    const std::string csv = lexical::feature_matrix_csv(m);
    CHECK(csv == "doc_id,group,the\nd0,A,500.000000\nd1,B,500.000000\n");
}
