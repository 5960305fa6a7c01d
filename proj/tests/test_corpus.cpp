#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "registra/corpus.hpp"
#include "registra/errors.hpp"

using namespace registra;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> toks(const std::string& text) { return corpus::tokenize(text); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("registra_corpus_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }
};

} // namespace

TEST_CASE("tokenize splits on every non-alphabetic character and folds case") {
    CHECK(toks("It's the dog's bone.") ==
          std::vector<std::string>{"it", "s", "the", "dog", "s", "bone"});
    CHECK(toks("").empty());
    CHECK(toks("Hello,   WORLD-2024") == std::vector<std::string>{"hello", "world"});
    CHECK(toks("well-known") == std::vector<std::string>{"well", "known"});
    CHECK(toks("don't") == std::vector<std::string>{"don", "t"});
}

TEST_CASE("tokenize handles non-ASCII letters") {
    CHECK(toks("Café Déjà") == std::vector<std::string>{"café", "déjà"});
    CHECK(toks("STRASSE Straße") == std::vector<std::string>{"strasse", "strasse"});
    CHECK(toks("naïve co-op") == std::vector<std::string>{"naïve", "co", "op"});
    // Malformed bytes act as separators rather than crashing.
    CHECK(toks("ab\xFF\xFE cd") == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("tokenize is idempotent on its own joined output") {
    const std::string text = "It's a well-known FACT; 42 isn't (really) much.";
    auto first = toks(text);
    std::string joined;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (i) joined += ' ';
        joined += first[i];
    }
    CHECK(toks(joined) == first);
}

TEST_CASE("word count is invariant under case changes and punctuation insertion") {
    const std::string text = "the quick brown fox jumps over the lazy dog";
    const auto base = toks(text).size();
    CHECK(toks("THE QUICK BROWN FOX JUMPS OVER THE LAZY DOG").size() == base);
    CHECK(toks("the, quick... brown; fox (jumps) over - the lazy dog!").size() == base);
}

TEST_CASE("load_corpus builds documents and group index from a manifest") {
    TempDir dir;
    dir.file("a.txt", "alpha beta gamma");
    dir.file("b.txt", "one two three four");
    const std::string manifest = dir.file("manifest.json", R"({
      "groups": ["A", "B"],
      "texts": [
        {"id": "d1", "path": "a.txt", "group": "A", "topic": "letters"},
        {"id": "d2", "path": "b.txt", "group": "B", "topic": "numbers"}
      ]
    })");

    auto c = corpus::load_corpus_file(manifest);
    REQUIRE(c.size() == 2);
    CHECK(c.document(0).id == "d1");
    CHECK(c.document(0).tokens == std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(c.group_members("A") == std::vector<std::size_t>{0});
    CHECK(c.group_members("B") == std::vector<std::size_t>{1});

    auto a = c.group_summary("A");
    CHECK(a.n_texts == 1);
    CHECK(a.total_words == 3);
    CHECK(a.mean_length == doctest::Approx(3.0));

    SUBCASE("per-group totals sum to the corpus total") {
        std::size_t sum = 0;
        for (const auto& g : c.group_labels()) sum += c.group_summary(g).total_words;
        CHECK(sum == c.corpus_summary().total_words);
    }
}

TEST_CASE("group_summary on a single 10-word document") {
    corpus::Document d;
    d.id = "solo";
    d.group = "G";
    d.raw_text = "a b c d e f g h i j";
    d.tokens = corpus::tokenize(d.raw_text);
    corpus::Corpus c({d});
    auto s = c.group_summary("G");
    CHECK(s.n_texts == 1);
    CHECK(s.total_words == 10);
    CHECK(s.mean_length == doctest::Approx(10.0));
    CHECK_THROWS_AS(c.group_summary("missing"), InputError);
}

TEST_CASE("manifest error paths") {
    TempDir dir;
    dir.file("a.txt", "text");

    SUBCASE("missing file names the path") {
        const std::string manifest = dir.file("m1.json", R"({
          "groups": ["A"],
          "texts": [{"id": "d1", "path": "nope.txt", "group": "A", "topic": ""}]
        })");
        CHECK_THROWS_WITH_AS(corpus::load_corpus_file(manifest),
                             doctest::Contains("nope.txt"), InputError);
    }
    SUBCASE("undeclared group") {
        const std::string manifest = dir.file("m2.json", R"({
          "groups": ["A"],
          "texts": [{"id": "d1", "path": "a.txt", "group": "B", "topic": ""}]
        })");
        CHECK_THROWS_WITH_AS(corpus::read_manifest(manifest),
                             doctest::Contains("undeclared group"), InputError);
    }
    SUBCASE("duplicate id") {
        const std::string manifest = dir.file("m3.json", R"({
          "groups": ["A"],
          "texts": [
            {"id": "d1", "path": "a.txt", "group": "A", "topic": ""},
            {"id": "d1", "path": "b.txt", "group": "A", "topic": ""}
          ]
        })");
        CHECK_THROWS_WITH_AS(corpus::read_manifest(manifest),
                             doctest::Contains("duplicate id"), InputError);
    }
    SUBCASE("malformed JSON") {
        const std::string manifest = dir.file("m4.json", "{not json");
        CHECK_THROWS_AS(corpus::read_manifest(manifest), InputError);
    }
}

TEST_CASE("corpus cache round-trips and is byte-stable") {
    TempDir dir;
    dir.file("a.txt", "alpha beta");
    dir.file("b.txt", "gamma delta epsilon");
    const std::string manifest = dir.file("manifest.json", R"({
      "groups": ["A", "B"],
      "texts": [
        {"id": "d1", "path": "a.txt", "group": "A", "topic": "t1"},
        {"id": "d2", "path": "b.txt", "group": "B", "topic": "t2"}
      ]
    })");

    auto c = corpus::load_corpus_file(manifest);
    const std::string cache1 = corpus::serialize_corpus(c);
    const std::string cache_path = (dir.path / "cache.json").string();
    corpus::write_corpus_cache(c, cache_path);

    auto c2 = corpus::load_corpus_file(cache_path);
    REQUIRE(c2.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(c2.document(i).id == c.document(i).id);
        CHECK(c2.document(i).group == c.document(i).group);
        CHECK(c2.document(i).topic == c.document(i).topic);
        CHECK(c2.document(i).raw_text == c.document(i).raw_text);
        CHECK(c2.document(i).tokens == c.document(i).tokens);
    }
    CHECK(corpus::serialize_corpus(c2) == cache1);
}

TEST_CASE("manifest_from_tsv converts tab-separated entries") {
    TempDir dir;
    const std::string tsv = dir.file("list.tsv",
                                     "d1\ta.txt\tA\ttopic one\n"
                                     "# comment\n"
                                     "d2\tb.txt\tB\n");
    auto m = corpus::manifest_from_tsv(tsv);
    REQUIRE(m.texts.size() == 2);
    CHECK(m.groups == std::vector<std::string>{"A", "B"});
    CHECK(m.texts[0].topic == "topic one");
    CHECK(m.texts[1].topic.empty());

    const std::string bad = dir.file("bad.tsv", "only-one-field\n");
    CHECK_THROWS_AS(corpus::manifest_from_tsv(bad), InputError);
}

TEST_CASE("subset keeps manifest order and rejects unknown groups") {
    std::vector<corpus::Document> docs;
    for (int i = 0; i < 4; ++i) {
        corpus::Document d;
        d.id = "d" + std::to_string(i);
        d.group = i % 2 == 0 ? "even" : "odd";
        d.raw_text = "word";
        d.tokens = corpus::tokenize(d.raw_text);
        docs.push_back(d);
    }
    corpus::Corpus c(docs);
    auto sub = c.subset({"odd"});
    REQUIRE(sub.size() == 2);
    CHECK(sub.document(0).id == "d1");
    CHECK(sub.document(1).id == "d3");
    CHECK_THROWS_AS(c.subset({"nope"}), InputError);
}
