#include "registra/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "registra/errors.hpp"
#include "registra/unicode.hpp"

namespace registra::corpus {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::vector<Token> tokenize(const std::string& raw_text) {
    std::vector<Token> tokens;
    std::u32string run;
    std::string_view view(raw_text);
    std::size_t pos = 0;
    auto flush = [&] {
        if (run.empty()) return;
        std::string tok;
        tok.reserve(run.size());
        for (char32_t cp : run) uni::encode_utf8(cp, tok);
        tokens.push_back(std::move(tok));
        run.clear();
    };
    while (pos < view.size()) {
        char32_t cp = uni::decode_utf8(view, pos);
        if (uni::is_letter(cp)) {
            uni::fold_append(cp, run);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

Corpus::Corpus(std::vector<Document> documents) : docs_(std::move(documents)) {
    std::set<std::string> seen_groups;
    for (std::size_t i = 0; i < docs_.size(); ++i) {
        const auto& g = docs_[i].group;
        if (seen_groups.insert(g).second) group_labels_.push_back(g);
        groups_[g].push_back(i);
    }
}

const std::vector<std::size_t>& Corpus::group_members(const std::string& group) const {
    auto it = groups_.find(group);
    if (it == groups_.end()) throw InputError("unknown group: " + group);
    return it->second;
}

bool Corpus::has_group(const std::string& group) const {
    return groups_.count(group) != 0;
}

GroupSummary Corpus::group_summary(const std::string& group) const {
    const auto& members = group_members(group);
    GroupSummary s;
    s.n_texts = members.size();
    for (std::size_t i : members) s.total_words += docs_[i].word_count();
    s.mean_length = s.n_texts ? static_cast<double>(s.total_words) / static_cast<double>(s.n_texts) : 0.0;
    return s;
}

GroupSummary Corpus::corpus_summary() const {
    GroupSummary s;
    s.n_texts = docs_.size();
    for (const auto& d : docs_) s.total_words += d.word_count();
    s.mean_length = s.n_texts ? static_cast<double>(s.total_words) / static_cast<double>(s.n_texts) : 0.0;
    return s;
}

Corpus Corpus::subset(const std::vector<std::string>& groups) const {
    std::set<std::string> wanted(groups.begin(), groups.end());
    for (const auto& g : wanted) {
        if (!has_group(g)) throw InputError("unknown group: " + g);
    }
    std::vector<Document> docs;
    for (const auto& d : docs_) {
        if (wanted.count(d.group)) docs.push_back(d);
    }
    return Corpus(std::move(docs));
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Manifest read_manifest(const std::string& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("manifest " + path + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("manifest " + path + ": expected a JSON object");

    Manifest m;
    bool is_cache = j.value("format", std::string()) == "registra-corpus-cache-v1";
    if (!j.contains("groups") || !j["groups"].is_array())
        throw InputError("manifest " + path + ": missing \"groups\" array");
    for (const auto& g : j["groups"]) m.groups.push_back(g.get<std::string>());

    const char* texts_key = is_cache ? "documents" : "texts";
    if (!j.contains(texts_key) || !j[texts_key].is_array())
        throw InputError("manifest " + path + ": missing \"" + std::string(texts_key) + "\" array");

    std::set<std::string> declared(m.groups.begin(), m.groups.end());
    std::set<std::string> ids;
    std::set<std::string> paths;
    for (const auto& t : j[texts_key]) {
        ManifestEntry e;
        e.id = t.value("id", std::string());
        e.group = t.value("group", std::string());
        e.topic = t.value("topic", std::string());
        if (e.id.empty()) throw InputError("manifest " + path + ": entry without id");
        if (!ids.insert(e.id).second)
            throw InputError("manifest " + path + ": duplicate id \"" + e.id + "\"");
        if (!declared.count(e.group))
            throw InputError("manifest " + path + ": undeclared group \"" + e.group +
                             "\" for id \"" + e.id + "\"");
        if (is_cache) {
            m.inline_texts.push_back(t.value("raw_text", std::string()));
        } else {
            e.path = t.value("path", std::string());
            if (e.path.empty())
                throw InputError("manifest " + path + ": entry \"" + e.id + "\" without path");
            if (!paths.insert(e.path).second)
                throw InputError("manifest " + path + ": duplicate path \"" + e.path + "\"");
        }
        m.texts.push_back(std::move(e));
    }
    m.has_inline_texts = is_cache;
    return m;
}

Corpus load_corpus(const Manifest& manifest, const std::string& base_dir) {
    std::vector<Document> docs;
    docs.reserve(manifest.texts.size());
    for (std::size_t i = 0; i < manifest.texts.size(); ++i) {
        const auto& e = manifest.texts[i];
        Document d;
        d.id = e.id;
        d.group = e.group;
        d.topic = e.topic;
        if (manifest.has_inline_texts) {
            d.raw_text = manifest.inline_texts[i];
        } else {
            fs::path p(e.path);
            if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
            d.raw_text = read_file(p.string());
        }
        d.tokens = tokenize(d.raw_text);
        docs.push_back(std::move(d));
    }
    return Corpus(std::move(docs));
}

Corpus load_corpus_file(const std::string& manifest_path) {
    Manifest m = read_manifest(manifest_path);
    return load_corpus(m, fs::path(manifest_path).parent_path().string());
}

std::string serialize_corpus(const Corpus& corpus) {
    ordered_json j;
    j["format"] = "registra-corpus-cache-v1";
    j["groups"] = corpus.group_labels();
    ordered_json docs = ordered_json::array();
    for (const auto& d : corpus.documents()) {
        ordered_json t;
        t["id"] = d.id;
        t["group"] = d.group;
        t["topic"] = d.topic;
        t["word_count"] = d.word_count();
        t["raw_text"] = d.raw_text;
        docs.push_back(std::move(t));
    }
    j["documents"] = std::move(docs);
    return j.dump(2) + "\n";
}

void write_corpus_cache(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write corpus cache: " + path);
    out << serialize_corpus(corpus);
}

Manifest manifest_from_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    Manifest m;
    std::set<std::string> groups;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 3)
            throw InputError(path + ":" + std::to_string(lineno) +
                             ": expected id<TAB>path<TAB>group[<TAB>topic]");
        ManifestEntry e;
        e.id = fields[0];
        e.path = fields[1];
        e.group = fields[2];
        e.topic = fields.size() > 3 ? fields[3] : std::string();
        if (groups.insert(e.group).second) m.groups.push_back(e.group);
        m.texts.push_back(std::move(e));
    }
    return m;
}

} // namespace registra::corpus
