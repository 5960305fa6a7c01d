#include "registra/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "registra/errors.hpp"
#include "registra/format.hpp"

namespace registra::tagger {

namespace {

const std::vector<std::string> kTagSet = {
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
    "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB",
    ".", ",", ":", "(", ")", "``", "''", "$", "#"};

const std::unordered_set<std::string> kPunctTags = {
    ".", ",", ":", "(", ")", "``", "''", "$", "#", "SYM"};

bool is_noun_tag(const std::string& t) {
    return t == "NN" || t == "NNS" || t == "NNP" || t == "NNPS";
}
bool is_adj_tag(const std::string& t) { return t == "JJ" || t == "JJR" || t == "JJS"; }
bool is_adv_tag(const std::string& t) { return t == "RB" || t == "RBR" || t == "RBS"; }
bool is_verb_tag(const std::string& t) {
    return t == "VB" || t == "VBD" || t == "VBG" || t == "VBN" || t == "VBP" || t == "VBZ";
}

std::string lower_ascii(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '\'';
}

bool has_digit(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool has_alpha(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalpha(c) != 0; });
}

const std::unordered_set<std::string> kBeForms = {
    "am", "is", "are", "was", "were", "be", "been", "being"};
const std::unordered_set<std::string> kHaveForms = {"have", "has", "had", "having"};
const std::unordered_set<std::string> kSeemForms = {
    "seem", "seems", "seemed", "seeming", "appear", "appears", "appeared", "appearing"};
const std::unordered_set<std::string> kSubjectPronouns = {
    "i", "you", "he", "she", "it", "we", "they"};
const std::unordered_set<std::string> kDemonstratives = {"this", "that", "these", "those"};
const std::unordered_set<std::string> kWhWords = {
    "who", "whom", "whose", "which", "what", "when", "where", "why", "how"};

bool nomz_suffix(const std::string& w) {
    if (w.size() < 6) return false;
    static const char* kSuffixes[] = {"tion",  "tions",  "sion", "sions", "ment",
                                      "ments", "ness",   "nesses", "ity",  "ities"};
    for (const char* s : kSuffixes) {
        if (ends_with(w, s)) return true;
    }
    return false;
}

} // namespace

const std::vector<std::string>& tag_set() { return kTagSet; }

bool is_valid_tag(const std::string& tag) {
    return std::find(kTagSet.begin(), kTagSet.end(), tag) != kTagSet.end();
}

bool is_punct_tag(const std::string& tag) { return kPunctTags.count(tag) != 0; }

std::size_t TagStream::word_token_count() const {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(),
                      [](const TaggedToken& t) { return !is_punct_tag(t.tag); }));
}

std::vector<std::string> tagger_tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string chunk;
    while (in >> chunk) {
        // Leading punctuation.
        std::size_t start = 0;
        while (start < chunk.size() && !is_word_char(chunk[start])) {
            out.push_back(chunk.substr(start, 1));
            ++start;
        }
        // Trailing punctuation (kept aside, emitted after the core).
        std::size_t end = chunk.size();
        std::vector<std::string> trailing;
        while (end > start && !is_word_char(chunk[end - 1])) {
            trailing.push_back(chunk.substr(end - 1, 1));
            --end;
        }
        std::string core = chunk.substr(start, end - start);
        // A bare apostrophe glued to the core is a possessive marker or quote.
        while (!core.empty() && core.front() == '\'') {
            out.push_back("'");
            core.erase(0, 1);
        }
        if (!core.empty()) {
            std::string low = lower_ascii(core);
            if (core.size() > 3 && ends_with(low, "n't")) {
                out.push_back(core.substr(0, core.size() - 3));
                out.push_back(core.substr(core.size() - 3));
            } else {
                static const char* kClitics[] = {"'s", "'re", "'ve", "'ll", "'d", "'m"};
                bool split = false;
                for (const char* cl : kClitics) {
                    const std::size_t n = std::char_traits<char>::length(cl);
                    if (core.size() > n && ends_with(low, cl)) {
                        out.push_back(core.substr(0, core.size() - n));
                        out.push_back(core.substr(core.size() - n));
                        split = true;
                        break;
                    }
                }
                if (!split) {
                    if (core.size() > 1 && core.back() == '\'') {
                        out.push_back(core.substr(0, core.size() - 1));
                        out.push_back("'");
                    } else {
                        out.push_back(core);
                    }
                }
            }
        }
        for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) out.push_back(*it);
    }
    return out;
}

Tagger Tagger::from_file(const std::string& lexicon_path) {
    std::ifstream in(lexicon_path);
    if (!in) throw InputError("cannot open tagger lexicon: " + lexicon_path);
    Tagger t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw InputError(lexicon_path + ":" + std::to_string(lineno) +
                             ": expected word<TAB>tag[ tag...]");
        std::string word = line.substr(0, tab);
        std::istringstream tags(line.substr(tab + 1));
        std::vector<std::string> list;
        std::string tag;
        while (tags >> tag) {
            if (!is_valid_tag(tag))
                throw InputError(lexicon_path + ":" + std::to_string(lineno) +
                                 ": unknown tag \"" + tag + "\"");
            list.push_back(tag);
        }
        if (list.empty())
            throw InputError(lexicon_path + ":" + std::to_string(lineno) + ": no tags");
        t.lexicon_[word] = std::move(list);
    }
    return t;
}

bool Tagger::has_tag(const std::string& word, const std::string& tag) const {
    auto it = lexicon_.find(word);
    if (it == lexicon_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), tag) != it->second.end();
}

namespace {

std::string punct_tag_for(const std::string& tok) {
    if (tok == "." || tok == "!" || tok == "?") return ".";
    if (tok == ",") return ",";
    if (tok == ";" || tok == ":" || tok == "-" || tok == "--") return ":";
    if (tok == "(" || tok == "[" || tok == "{") return "(";
    if (tok == ")" || tok == "]" || tok == "}") return ")";
    if (tok == "\"" || tok == "'" || tok == "`" || tok == "``" || tok == "''") return "''";
    if (tok == "$") return "$";
    if (tok == "#") return "#";
    return "SYM";
}

std::string guess_by_suffix(const std::string& low) {
    if (ends_with(low, "ly")) return "RB";
    if (ends_with(low, "ings")) return "NNS";
    if (ends_with(low, "ing")) return "VBG";
    if (ends_with(low, "ed")) return "VBD";
    static const char* kNounSingular[] = {"tion", "sion", "ment", "ness", "ity",
                                          "ance", "ence", "hood", "ship", "ism",
                                          "ist",  "ogy",  "er",   "or"};
    static const char* kNounPlural[] = {"tions", "sions", "ments", "nesses", "ities",
                                        "ances", "ences", "hoods", "ships",  "isms",
                                        "ists",  "ogies", "ers",   "ors"};
    static const char* kAdjective[] = {"ous", "ful", "ive", "able", "ible",
                                       "ical", "ic",  "ish", "less", "al"};
    for (const char* s : kNounPlural) {
        if (low.size() > std::char_traits<char>::length(s) + 1 && ends_with(low, s)) return "NNS";
    }
    for (const char* s : kNounSingular) {
        if (low.size() > std::char_traits<char>::length(s) + 1 && ends_with(low, s)) return "NN";
    }
    for (const char* s : kAdjective) {
        if (low.size() > std::char_traits<char>::length(s) + 1 && ends_with(low, s)) return "JJ";
    }
    if (ends_with(low, "est") && low.size() > 4) return "JJS";
    if (low.size() > 3 && low.back() == 's' && !ends_with(low, "ss") && !ends_with(low, "us") &&
        !ends_with(low, "is"))
        return "NNS";
    return "NN";
}

} // namespace

std::string Tagger::lookup_or_guess(const std::string& token, bool sentence_initial) const {
    if (has_digit(token)) {
        if (has_alpha(token) && token.find('-') != std::string::npos) return "JJ";
        return "CD";
    }
    auto it = lexicon_.find(token);
    if (it != lexicon_.end()) return it->second.front();
    std::string low = lower_ascii(token);
    const bool capitalized = std::isupper(static_cast<unsigned char>(token[0])) != 0;
    if (low != token) {
        auto low_it = lexicon_.find(low);
        if (low_it != lexicon_.end()) return low_it->second.front();
    }
    if (capitalized && !sentence_initial) {
        return ends_with(low, "s") && !ends_with(low, "ss") && low.size() > 4 ? "NNPS" : "NNP";
    }
    return guess_by_suffix(low);
}

void Tagger::apply_context_rules(std::vector<TaggedToken>& toks) const {
    auto word_at = [&](std::size_t i) { return lower_ascii(toks[i].surface); };
    auto next_word_tag = [&](std::size_t i) -> std::string {
        return i + 1 < toks.size() ? toks[i + 1].tag : std::string(".");
    };
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const std::string low = word_at(i);
        const std::string next_tag = next_word_tag(i);
        const std::string prev_tag = i > 0 ? toks[i - 1].tag : std::string(".");

        if (low == "that") {
            if (is_noun_tag(next_tag) || is_adj_tag(next_tag) || next_tag == "CD") {
                toks[i].tag = "DT";
            } else if (is_verb_tag(next_tag) || next_tag == "MD") {
                toks[i].tag = (i > 0 && is_noun_tag(prev_tag)) ? "WDT" : "DT";
            } else {
                toks[i].tag = "IN";
            }
            continue;
        }
        if (low == "her") {
            toks[i].tag = (is_noun_tag(next_tag) || is_adj_tag(next_tag) || next_tag == "CD")
                              ? "PRP$"
                              : "PRP";
            continue;
        }
        if (low == "'s") {
            toks[i].tag = (prev_tag == "PRP" || prev_tag == "EX" || prev_tag == "WP" ||
                           prev_tag == "DT")
                              ? "VBZ"
                              : "POS";
            continue;
        }
        if (low == "'" && (prev_tag == "NNS" || prev_tag == "NNPS")) {
            toks[i].tag = "POS";
            continue;
        }
        if (low == "there") {
            // Existential when a BE form follows.
            std::size_t j = i + 1;
            while (j < toks.size() && (is_adv_tag(toks[j].tag) || word_at(j) == "not")) ++j;
            toks[i].tag = (j < toks.size() && kBeForms.count(word_at(j))) ? "EX" : "RB";
            continue;
        }
        if ((low == "more" || low == "most") &&
            (is_adj_tag(next_tag) || next_tag == "RB")) {
            toks[i].tag = low == "more" ? "RBR" : "RBS";
            continue;
        }
        // Sentence adverbials: "First," / "Next," and approximators before
        // numbers.
        if (next_tag == "," && (low == "first" || low == "second" || low == "third" ||
                                "last" == low || low == "next")) {
            toks[i].tag = "RB";
            continue;
        }
        if ((low == "about" || low == "around") && next_tag == "CD") {
            toks[i].tag = "RB";
            continue;
        }

        // Progressive: -ing form directly after a BE form reads verbal.
        if (ends_with(low, "ing") && toks[i].tag != "VBG" && has_tag(low, "VBG")) {
            std::size_t j = i;
            while (j > 0 && (is_adv_tag(toks[j - 1].tag) || word_at(j - 1) == "not")) --j;
            if (j > 0 && (kBeForms.count(word_at(j - 1)) ||
                          (word_at(j - 1) == "'s" && toks[j - 1].tag == "VBZ"))) {
                toks[i].tag = "VBG";
                continue;
            }
        }

        // Noun reading after determiners for words defaulted to a verb tag.
        if ((toks[i].tag == "VB" || toks[i].tag == "VBP") &&
            (prev_tag == "DT" || prev_tag == "PRP$" || is_adj_tag(prev_tag) ||
             prev_tag == "CD")) {
            toks[i].tag = toks[i].surface.size() > 2 && ends_with(low, "s") ? "NNS" : "NN";
            continue;
        }

        // Finite-verb reading after a subject for noun-primary words:
        // pronouns and plural nouns take VBP, relativizers either form.
        if (prev_tag == "PRP" || prev_tag == "NNS" || prev_tag == "WDT" || prev_tag == "WP") {
            if (toks[i].tag == "NN" && has_tag(low, "VBP")) {
                toks[i].tag = "VBP";
                continue;
            }
            if ((prev_tag == "WDT" || prev_tag == "WP" || prev_tag == "PRP") &&
                toks[i].tag == "NNS" && has_tag(low, "VBZ")) {
                toks[i].tag = "VBZ";
                continue;
            }
        }

        // Base form after a modal, infinitival "to", or do-support.
        if (i > 0 && (toks[i].tag == "VBP" || toks[i].tag == "NN" || toks[i].tag == "VBZ" ||
                      toks[i].tag == "NNS")) {
            std::size_t j = i;
            while (j > 0 && (is_adv_tag(toks[j - 1].tag) || word_at(j - 1) == "not")) --j;
            if (j > 0) {
                const std::string& before = toks[j - 1].tag;
                const std::string before_word = word_at(j - 1);
                const bool do_support =
                    before_word == "do" || before_word == "does" || before_word == "did";
                const bool verb_possible =
                    toks[i].tag == "VBP" || has_tag(low, "VB") || has_tag(low, "VBP");
                if ((before == "MD" || before == "TO" || do_support) && verb_possible) {
                    toks[i].tag = "VB";
                    continue;
                }
            }
        }

        // Participle after BE/HAVE.
        if (toks[i].tag == "VBD" ||
            ((toks[i].tag == "VBP" || toks[i].tag == "VB") && has_tag(low, "VBN"))) {
            std::size_t j = i;
            while (j > 0 && (is_adv_tag(toks[j - 1].tag) || word_at(j - 1) == "not")) --j;
            if (j > 0) {
                const std::string before = word_at(j - 1);
                const bool have_before = kHaveForms.count(before) != 0 || before == "'ve" ||
                                         before == "'d";
                const bool be_before = kBeForms.count(before) != 0 ||
                                       (before == "'s" && toks[j - 1].tag == "VBZ");
                if (have_before || (be_before && toks[i].tag == "VBD")) {
                    toks[i].tag = "VBN";
                    continue;
                }
            }
        }
        if (toks[i].tag == "VBD") {
            // Coordinated participle: "written and revised".
            if (i >= 2 && toks[i - 1].tag == "CC" && toks[i - 2].tag == "VBN") {
                toks[i].tag = "VBN";
                continue;
            }
            // Participial modifier: "the proposed law".
            if ((prev_tag == "DT" || prev_tag == "PRP$" || is_adj_tag(prev_tag)) &&
                (is_noun_tag(next_tag) || is_adj_tag(next_tag))) {
                toks[i].tag = "VBN";
                continue;
            }
        }
    }
}

TagStream Tagger::tag_text(const std::string& doc_id, const std::string& text) const {
    TagStream stream;
    stream.doc_id = doc_id;
    std::vector<std::string> tokens = tagger_tokenize(text);
    stream.tokens.reserve(tokens.size());
    bool sentence_initial = true;
    for (const auto& tok : tokens) {
        TaggedToken tt;
        tt.surface = tok;
        if (!has_alpha(tok) && !has_digit(tok)) {
            tt.tag = punct_tag_for(tok);
            if (tok == "." || tok == "!" || tok == "?") sentence_initial = true;
        } else {
            tt.tag = lookup_or_guess(tok, sentence_initial);
            sentence_initial = false;
        }
        stream.tokens.push_back(std::move(tt));
    }
    apply_context_rules(stream.tokens);
    return stream;
}

TagStream Tagger::tag(const corpus::Document& doc) const {
    return tag_text(doc.id, doc.raw_text);
}

TagStream ingest_tagged(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tagged file: " + path);
    TagStream stream;
    stream.doc_id = path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw InputError(path + ":" + std::to_string(lineno) +
                             ": expected token<TAB>tag");
        TaggedToken t;
        t.surface = line.substr(0, tab);
        t.tag = line.substr(tab + 1);
        if (t.surface.empty() || t.tag.empty() || t.tag.find('\t') != std::string::npos)
            throw InputError(path + ":" + std::to_string(lineno) +
                             ": expected token<TAB>tag");
        if (!is_valid_tag(t.tag))
            throw InputError(path + ":" + std::to_string(lineno) + ": unknown tag \"" +
                             t.tag + "\"");
        stream.tokens.push_back(std::move(t));
    }
    return stream;
}

std::string export_tagged(const TagStream& stream) {
    std::ostringstream out;
    for (const auto& t : stream.tokens) {
        out << t.surface << '\t' << t.tag << '\n';
        if (t.tag == ".") out << '\n';
    }
    return out.str();
}

namespace {

const std::array<std::string, kBiberFeatureCount> kFeatureCodes = {
    "ANDC", "BEMA", "DEMO", "GER", "JJ", "NN", "NOMZ", "PASS", "PEAS", "PHC",
    "PIN", "PIT", "POMD", "PRED", "PRIV", "RB", "TO", "TPP3", "VBD", "VPRT"};

enum FeatureIndex {
    ANDC, BEMA, DEMO, GER, JJ, NN, NOMZ, PASS, PEAS, PHC,
    PIN, PIT, POMD, PRED, PRIV, RB, TO, TPP3, VBD, VPRT
};

// Coarse classes for phrasal coordination matching.
int coarse_class(const std::string& tag) {
    if (is_noun_tag(tag)) return 1;
    if (is_verb_tag(tag)) return 2;
    if (is_adj_tag(tag)) return 3;
    if (is_adv_tag(tag)) return 4;
    return 0;
}

bool is_be_form(const TaggedToken& t, const std::string& low) {
    if (kBeForms.count(low)) return true;
    return (low == "'s" && t.tag == "VBZ") || low == "'re" || low == "'m";
}

bool is_have_form(const TaggedToken& t, const std::string& low) {
    if (kHaveForms.count(low)) return true;
    return low == "'ve" || (low == "'d" && t.tag == "VBD");
}

} // namespace

const std::array<std::string, kBiberFeatureCount>& biber_feature_codes() {
    return kFeatureCodes;
}

double BiberFeatureVector::rate_per_100(std::size_t feature) const {
    if (word_count == 0) return 0.0;
    return 100.0 * static_cast<double>(counts[feature]) / static_cast<double>(word_count);
}

std::size_t BiberFeatureVector::count_of(const std::string& code) const {
    auto it = std::find(kFeatureCodes.begin(), kFeatureCodes.end(), code);
    if (it == kFeatureCodes.end()) throw InputError("unknown feature code: " + code);
    return counts[static_cast<std::size_t>(it - kFeatureCodes.begin())];
}

double BiberFeatureVector::rate_of(const std::string& code) const {
    auto it = std::find(kFeatureCodes.begin(), kFeatureCodes.end(), code);
    if (it == kFeatureCodes.end()) throw InputError("unknown feature code: " + code);
    return rate_per_100(static_cast<std::size_t>(it - kFeatureCodes.begin()));
}

FeatureRuleData FeatureRuleData::from_dir(const std::string& data_dir) {
    auto load = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open rule data file: " + path);
        std::unordered_set<std::string> words;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t a = line.find_first_not_of(" \t");
            if (a == std::string::npos) continue;
            std::size_t b = line.find_last_not_of(" \t");
            words.insert(line.substr(a, b - a + 1));
        }
        return words;
    };
    FeatureRuleData d;
    d.private_verbs = load(data_dir + "/private_verbs.txt");
    d.prepositions = load(data_dir + "/prepositions.txt");
    d.third_person_pronouns = load(data_dir + "/third_person_pronouns.txt");
    return d;
}

BiberFeatureVector extract_biber_features(const TagStream& stream,
                                          const FeatureRuleData& rules) {
    if (stream.tokens.empty())
        throw InputError("extract_biber_features: empty tag stream for \"" + stream.doc_id + "\"");

    const auto& toks = stream.tokens;
    const std::size_t n = toks.size();
    std::vector<std::string> low(n);
    for (std::size_t i = 0; i < n; ++i) low[i] = lower_ascii(toks[i].surface);

    BiberFeatureVector v;
    v.doc_id = stream.doc_id;
    v.word_count = stream.word_token_count();
    if (v.word_count == 0)
        throw InputError("extract_biber_features: no word tokens in \"" + stream.doc_id + "\"");

    auto next_skipping_adverbs = [&](std::size_t i) -> std::size_t {
        std::size_t j = i + 1;
        while (j < n && (is_adv_tag(toks[j].tag) || low[j] == "not" || low[j] == "n't")) ++j;
        return j;
    };
    auto prev_skipping_adverbs = [&](std::size_t i) -> std::size_t {
        std::size_t j = i;
        while (j > 0 && (is_adv_tag(toks[j - 1].tag) || low[j - 1] == "not" || low[j - 1] == "n't"))
            --j;
        return j == 0 ? n : j - 1; // n = none
    };

    // Gerunds are identified first so the noun partition can treat them as
    // their own class.
    std::vector<bool> is_ger(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(ends_with(low[i], "ing") || ends_with(low[i], "ings"))) continue;
        if (low[i].size() < 5) continue;
        if (i == 0) continue;
        const std::string& pt = toks[i - 1].tag;
        if (!(pt == "DT" || pt == "IN" || pt == "PRP$" || pt == "POS")) continue;
        const std::string nt = i + 1 < n ? toks[i + 1].tag : std::string(".");
        if (is_noun_tag(nt) || is_adj_tag(nt)) continue; // attributive position
        is_ger[i] = true;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::string& tag = toks[i].tag;
        const std::string& w = low[i];
        const std::string next_tag = i + 1 < n ? toks[i + 1].tag : std::string(".");

        if (is_ger[i]) {
            ++v.counts[GER];
        } else if (is_noun_tag(tag)) {
            if ((tag == "NN" || tag == "NNS") && nomz_suffix(w)) ++v.counts[NOMZ];
            else ++v.counts[NN];
        }

        if (is_adj_tag(tag)) {
            if (is_noun_tag(next_tag) || is_adj_tag(next_tag)) {
                ++v.counts[JJ];
            } else {
                const std::size_t p = prev_skipping_adverbs(i);
                if (p < n && (is_be_form(toks[p], low[p]) || kSeemForms.count(low[p]))) {
                    ++v.counts[PRED];
                }
            }
        }

        if (is_be_form(toks[i], w)) {
            const std::size_t j = next_skipping_adverbs(i);
            const std::string ft = j < n ? toks[j].tag : std::string(".");
            if (ft == "VBN") ++v.counts[PASS];
            else if (ft != "VBG") ++v.counts[BEMA];
        }

        if (is_have_form(toks[i], w)) {
            const std::size_t j = next_skipping_adverbs(i);
            if (j < n && toks[j].tag == "VBN") ++v.counts[PEAS];
        }

        if (w == "and" || w == "or") {
            const int left = i > 0 ? coarse_class(toks[i - 1].tag) : 0;
            const int right = i + 1 < n ? coarse_class(toks[i + 1].tag) : 0;
            if (left != 0 && left == right) {
                ++v.counts[PHC];
            } else if (w == "and") {
                const bool clause_punct_before =
                    i > 0 && (toks[i - 1].tag == "," || toks[i - 1].tag == ":" ||
                              toks[i - 1].tag == ".");
                const bool clausal_cue_after =
                    i + 1 < n && (kSubjectPronouns.count(low[i + 1]) ||
                                  kDemonstratives.count(low[i + 1]) ||
                                  kWhWords.count(low[i + 1]));
                if (clause_punct_before || clausal_cue_after) ++v.counts[ANDC];
            }
        }

        if (tag == "IN" && w != "that" && rules.prepositions.count(w)) ++v.counts[PIN];
        if (w == "it") ++v.counts[PIT];
        if (w == "can" || w == "may" || w == "might" || w == "could") ++v.counts[POMD];
        if (is_verb_tag(tag) && rules.private_verbs.count(w)) ++v.counts[PRIV];
        if (is_adv_tag(tag) && w != "not" && w != "n't") ++v.counts[RB];
        if (w == "to" && next_tag == "VB") ++v.counts[TO];
        if (rules.third_person_pronouns.count(w)) ++v.counts[TPP3];

        // BE forms are counted by BEMA/PASS, not the tense features.
        if (tag == "VBD" && w != "was" && w != "were") ++v.counts[VBD];
        if ((tag == "VBP" || tag == "VBZ") && !is_be_form(toks[i], w)) ++v.counts[VPRT];

        if (kDemonstratives.count(w)) {
            if (w != "that") {
                ++v.counts[DEMO];
            } else {
                const bool complementizer_like =
                    is_verb_tag(next_tag) || next_tag == "MD" || next_tag == "PRP" ||
                    next_tag == "PRP$";
                if (!complementizer_like) ++v.counts[DEMO];
            }
        }
    }
    return v;
}

const std::array<std::string, kWordClassCount>& word_class_labels() {
    static const std::array<std::string, kWordClassCount> kLabels = {
        "nouns",          "nominalizations",       "attributive_adjectives",
        "phrasal_coordination", "past_tense_verbs", "adverbs",
        "third_person_pronouns", "predicative_adjectives"};
    return kLabels;
}

WordClassProfile word_class_profile(const std::vector<BiberFeatureVector>& vectors,
                                    const std::string& group) {
    if (vectors.empty())
        throw InputError("word_class_profile: empty group \"" + group + "\"");
    static const std::array<FeatureIndex, kWordClassCount> kSources = {
        NN, NOMZ, JJ, PHC, VBD, RB, TPP3, PRED};
    WordClassProfile p;
    p.group = group;
    for (std::size_t c = 0; c < kWordClassCount; ++c) {
        double sum = 0.0;
        for (const auto& v : vectors) {
            sum += v.rate_per_100(static_cast<std::size_t>(kSources[c])) * 10.0;
        }
        p.rates_per_1000[c] = sum / static_cast<double>(vectors.size());
    }
    return p;
}

std::string feature_vectors_csv(const std::vector<BiberFeatureVector>& vectors,
                                const std::vector<std::string>& groups) {
    std::ostringstream out;
    out << "doc_id,group";
    for (const auto& code : kFeatureCodes) out << ',' << code;
    out << '\n';
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        out << csv_quote(vectors[i].doc_id) << ',' << csv_quote(groups[i]);
        for (std::size_t f = 0; f < kBiberFeatureCount; ++f) {
            out << ',' << format_fixed(vectors[i].rate_per_100(f), 6);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace registra::tagger
