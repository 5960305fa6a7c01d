#include "registra/genclient.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "registra/corpus.hpp"
#include "registra/digest.hpp"
#include "registra/errors.hpp"

namespace registra::genclient {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::vector<PromptTemplate> kTemplates = {
    {"P1-essay", "Write a college argumentative essay on {topic}"},
    {"P1-wiki", "Write a Wikipedia article on {topic}"},
    {"P2-essay", "Pretend to be a college student and write a 1,000-word essay on {topic}"},
    {"P2-wiki", "Write a 1,000-word encyclopedia page on {topic}"},
};

std::string utc_now_iso() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

const std::vector<PromptTemplate>& builtin_templates() { return kTemplates; }

const PromptTemplate& template_by_id(const std::string& id) {
    for (const auto& t : kTemplates) {
        if (t.id == id) return t;
    }
    throw InputError("unknown prompt template: " + id);
}

std::string render_prompt(const PromptTemplate& tmpl, const std::string& topic) {
    if (topic.empty()) throw InputError("render_prompt: empty topic");
    const std::string placeholder = "{topic}";
    const std::size_t pos = tmpl.text.find(placeholder);
    if (pos == std::string::npos)
        throw InputError("template \"" + tmpl.id + "\" has no {topic} placeholder");
    if (tmpl.text.find(placeholder, pos + 1) != std::string::npos)
        throw InputError("template \"" + tmpl.id + "\" has multiple {topic} placeholders");
    std::string out = tmpl.text;
    out.replace(pos, placeholder.size(), topic);
    return out;
}

std::vector<GenerationJob> read_jobs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open jobs file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("jobs file " + path + ": " + e.what());
    }
    if (!j.is_array()) throw InputError("jobs file " + path + ": expected a JSON array");
    std::vector<GenerationJob> jobs;
    std::set<std::string> ids;
    for (const auto& item : j) {
        GenerationJob job;
        job.id = item.value("id", std::string());
        job.template_id = item.value("template", std::string());
        job.topic = item.value("topic", std::string());
        job.group = item.value("group", std::string());
        if (item.contains("params")) job.params = item["params"];
        job.max_attempts = item.value("max_attempts", 3);
        job.backoff_seconds = item.value("backoff_seconds", 1.0);
        if (job.id.empty() || job.template_id.empty() || job.topic.empty() || job.group.empty())
            throw InputError("jobs file " + path + ": each job needs id, template, topic, group");
        if (job.max_attempts < 1)
            throw InputError("jobs file " + path + ": max_attempts must be at least 1");
        if (!ids.insert(job.id).second)
            throw InputError("jobs file " + path + ": duplicate job id \"" + job.id + "\"");
        template_by_id(job.template_id); // validates
        jobs.push_back(std::move(job));
    }
    return jobs;
}

HttpTransport::HttpTransport(std::string endpoint, std::string api_key)
    : endpoint_(std::move(endpoint)), api_key_(std::move(api_key)) {
    if (endpoint_.empty())
        throw InputError("generation endpoint not configured (set GEN_ENDPOINT)");
}

std::unique_ptr<HttpTransport> HttpTransport::from_env() {
    const char* endpoint = std::getenv("GEN_ENDPOINT");
    const char* key = std::getenv("GEN_API_KEY");
    return std::make_unique<HttpTransport>(endpoint ? endpoint : "", key ? key : "");
}

TransportResult HttpTransport::complete(const std::string& prompt, const json& params) {
    // Split endpoint into host and path.
    std::string url = endpoint_;
    std::string host = url;
    std::string path = "/v1/chat/completions";
    const std::size_t scheme = url.find("://");
    const std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
    const std::size_t slash = url.find('/', host_start);
    if (slash != std::string::npos) {
        host = url.substr(0, slash);
        path = url.substr(slash);
    }

    json body;
    body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
    for (auto it = params.begin(); it != params.end(); ++it) body[it.key()] = it.value();
    if (!body.contains("model")) body["model"] = "default";

    httplib::Client client(host);
    client.set_read_timeout(300, 0);
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    TransportResult r;
    auto res = client.Post(path, headers, body.dump(), "application/json");
    if (!res) {
        r.error = "transport error: " + httplib::to_string(res.error());
        return r;
    }
    r.status = res->status;
    if (res->status == 401 || res->status == 403) {
        r.error = "authentication failed (" + std::to_string(res->status) + ")";
        return r;
    }
    if (res->status != 200) {
        r.error = "http status " + std::to_string(res->status);
        return r;
    }
    try {
        json resp = json::parse(res->body);
        r.text = resp.at("choices").at(0).at("message").at("content").get<std::string>();
        r.ok = true;
    } catch (const json::exception& e) {
        r.error = std::string("malformed response: ") + e.what();
    }
    return r;
}

std::string HttpTransport::identity() const {
    return "http:" + sha256_hex(endpoint_).substr(0, 16);
}

MockTransport::MockTransport(int fail_times, std::string prefix)
    : fail_times_(fail_times), prefix_(std::move(prefix)) {}

TransportResult MockTransport::complete(const std::string& prompt, const json&) {
    ++calls_;
    TransportResult r;
    int& failed = failures_so_far_[prompt];
    if (failed < fail_times_) {
        ++failed;
        r.status = 503;
        r.error = "mock transient failure";
        return r;
    }
    r.ok = true;
    r.status = 200;
    r.text = prefix_ + prompt;
    return r;
}

std::string MockTransport::identity() const { return "mock"; }

namespace {

ordered_json record_to_json(const GenerationRecord& r) {
    ordered_json j;
    j["job_id"] = r.job_id;
    j["template"] = r.template_id;
    j["topic"] = r.topic;
    j["group"] = r.group;
    j["prompt"] = r.prompt;
    j["response_word_count"] = r.response_word_count;
    j["timestamp"] = r.timestamp;
    j["attempts"] = r.attempts;
    j["endpoint"] = r.endpoint_digest;
    j["ok"] = r.ok;
    if (!r.ok) j["error"] = r.error;
    j["response_sha256"] = r.ok ? sha256_hex(r.response_text) : "";
    return j;
}

std::map<std::string, GenerationRecord> load_existing_records(const std::string& path) {
    std::map<std::string, GenerationRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.value("ok", false)) continue;
        GenerationRecord r;
        r.job_id = j.value("job_id", std::string());
        r.template_id = j.value("template", std::string());
        r.topic = j.value("topic", std::string());
        r.group = j.value("group", std::string());
        r.prompt = j.value("prompt", std::string());
        r.response_word_count = j.value("response_word_count", std::size_t{0});
        r.timestamp = j.value("timestamp", std::string());
        r.attempts = j.value("attempts", 0);
        r.endpoint_digest = j.value("endpoint", std::string());
        r.ok = true;
        if (!r.job_id.empty()) out[r.job_id] = std::move(r);
    }
    return out;
}

class AuthFailure : public InputError {
public:
    using InputError::InputError;
};

} // namespace

GenerateResult generate_corpus(const std::vector<GenerationJob>& jobs,
                               Transport& transport,
                               const GenerateOptions& options) {
    if (options.out_dir.empty()) throw InputError("generate_corpus: no output directory");
    const fs::path out_dir(options.out_dir);
    const fs::path texts_dir = out_dir / "texts";
    fs::create_directories(texts_dir);

    GenerateResult result;
    result.records_path = (out_dir / "records.jsonl").string();
    result.manifest_path = (out_dir / "manifest.json").string();
    result.failures_path = (out_dir / "failures.json").string();

    const auto now = options.timestamp_provider ? options.timestamp_provider
                                                : std::function<std::string()>(utc_now_iso);
    const auto sleep_for = options.sleeper
                               ? options.sleeper
                               : std::function<void(double)>([](double seconds) {
                                     std::this_thread::sleep_for(
                                         std::chrono::duration<double>(seconds));
                                 });

    std::map<std::string, GenerationRecord> existing;
    if (options.resume) existing = load_existing_records(result.records_path);

    result.records.resize(jobs.size());
    std::mutex transport_mutex;
    std::mutex abort_mutex;
    std::string abort_message;

    auto run_job = [&](std::size_t index) {
        const GenerationJob& job = jobs[index];
        GenerationRecord rec;
        rec.job_id = job.id;
        rec.template_id = job.template_id;
        rec.topic = job.topic;
        rec.group = job.group;
        rec.endpoint_digest = transport.identity();

        auto it = existing.find(job.id);
        if (it != existing.end() &&
            fs::exists(texts_dir / (job.id + ".txt"))) {
            result.records[index] = it->second;
            return;
        }

        rec.prompt = render_prompt(template_by_id(job.template_id), job.topic);
        TransportResult tr;
        for (int attempt = 1; attempt <= job.max_attempts; ++attempt) {
            rec.attempts = attempt;
            {
                std::lock_guard<std::mutex> lock(transport_mutex);
                if (options.min_request_interval_seconds > 0.0 && attempt == 1)
                    sleep_for(options.min_request_interval_seconds);
                tr = transport.complete(rec.prompt, job.params);
            }
            if (tr.ok) break;
            if (tr.status == 401 || tr.status == 403) {
                std::lock_guard<std::mutex> lock(abort_mutex);
                if (abort_message.empty())
                    abort_message = "authentication failure: " + tr.error +
                                    " -- check GEN_API_KEY and GEN_ENDPOINT";
                return;
            }
            if (attempt < job.max_attempts && job.backoff_seconds > 0.0)
                sleep_for(job.backoff_seconds * attempt);
        }
        rec.timestamp = now();
        if (tr.ok) {
            rec.ok = true;
            rec.response_text = tr.text;
            rec.response_word_count = corpus::tokenize(tr.text).size();
            std::ofstream out(texts_dir / (job.id + ".txt"), std::ios::binary);
            out << tr.text;
        } else {
            rec.ok = false;
            rec.error = tr.error;
        }
        result.records[index] = std::move(rec);
    };

    if (options.concurrency <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            run_job(i);
            {
                std::lock_guard<std::mutex> lock(abort_mutex);
                if (!abort_message.empty()) throw AuthFailure(abort_message);
            }
        }
    } else {
        std::vector<std::thread> workers;
        std::mutex queue_mutex;
        std::size_t next = 0;
        const std::size_t pool = std::min(options.concurrency, jobs.size());
        for (std::size_t w = 0; w < pool; ++w) {
            workers.emplace_back([&] {
                while (true) {
                    std::size_t index;
                    {
                        std::lock_guard<std::mutex> lock(queue_mutex);
                        if (next >= jobs.size()) return;
                        index = next++;
                    }
                    {
                        std::lock_guard<std::mutex> lock(abort_mutex);
                        if (!abort_message.empty()) return;
                    }
                    run_job(index);
                }
            });
        }
        for (auto& t : workers) t.join();
        if (!abort_message.empty()) throw AuthFailure(abort_message);
    }

    // records.jsonl rewritten in job order so reruns are reproducible.
    {
        std::ofstream out(result.records_path, std::ios::binary);
        for (const auto& rec : result.records) {
            if (rec.job_id.empty()) continue;
            out << record_to_json(rec).dump() << '\n';
        }
    }

    ordered_json failures = ordered_json::array();
    ordered_json manifest;
    std::vector<std::string> group_order;
    ordered_json texts = ordered_json::array();
    for (const auto& rec : result.records) {
        if (rec.job_id.empty()) continue;
        if (!rec.ok) {
            ++result.failed;
            ordered_json f;
            f["job_id"] = rec.job_id;
            f["error"] = rec.error;
            f["attempts"] = rec.attempts;
            failures.push_back(std::move(f));
            continue;
        }
        ++result.succeeded;
        if (std::find(group_order.begin(), group_order.end(), rec.group) == group_order.end())
            group_order.push_back(rec.group);
        ordered_json t;
        t["id"] = rec.job_id;
        t["path"] = "texts/" + rec.job_id + ".txt";
        t["group"] = rec.group;
        t["topic"] = rec.topic;
        texts.push_back(std::move(t));
    }
    manifest["groups"] = group_order;
    manifest["texts"] = std::move(texts);
    {
        std::ofstream out(result.manifest_path, std::ios::binary);
        out << manifest.dump(2) << '\n';
    }
    {
        std::ofstream out(result.failures_path, std::ios::binary);
        out << failures.dump(2) << '\n';
    }
    return result;
}

std::vector<LengthReport> length_report(const std::vector<GenerationRecord>& records) {
    if (records.empty()) throw InputError("length_report: no records");
    std::map<std::string, LengthReport> by_template;
    std::vector<std::string> order;
    for (const auto& r : records) {
        if (!r.ok) continue;
        auto [it, inserted] = by_template.try_emplace(r.template_id);
        if (inserted) {
            it->second.template_id = r.template_id;
            it->second.min_words = r.response_word_count;
            it->second.max_words = r.response_word_count;
            order.push_back(r.template_id);
        }
        LengthReport& rep = it->second;
        rep.mean_words += static_cast<double>(r.response_word_count);
        rep.min_words = std::min(rep.min_words, r.response_word_count);
        rep.max_words = std::max(rep.max_words, r.response_word_count);
        ++rep.n;
    }
    std::vector<LengthReport> out;
    for (const auto& id : order) {
        LengthReport rep = by_template[id];
        rep.mean_words /= static_cast<double>(rep.n);
        out.push_back(rep);
    }
    return out;
}

} // namespace registra::genclient
