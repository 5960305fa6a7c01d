#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace registra::genclient {

struct PromptTemplate {
    std::string id;   // P1-essay | P1-wiki | P2-essay | P2-wiki | custom
    std::string text; // contains exactly one {topic} placeholder
};

const std::vector<PromptTemplate>& builtin_templates();
const PromptTemplate& template_by_id(const std::string& id);

std::string render_prompt(const PromptTemplate& tmpl, const std::string& topic);

struct GenerationJob {
    std::string id;
    std::string template_id;
    std::string topic;
    std::string group;
    nlohmann::json params = nlohmann::json::object(); // passed through opaquely
    int max_attempts = 3;
    double backoff_seconds = 1.0;
};

std::vector<GenerationJob> read_jobs(const std::string& path);

struct TransportResult {
    bool ok = false;
    int status = 0;
    std::string text;
    std::string error;
};

class Transport {
public:
    virtual ~Transport() = default;
    virtual TransportResult complete(const std::string& prompt, const nlohmann::json& params) = 0;
    virtual std::string identity() const = 0;
};

// Generic JSON chat-completions client. Endpoint from GEN_ENDPOINT (or the
// explicit argument), credentials only from GEN_API_KEY.
class HttpTransport : public Transport {
public:
    explicit HttpTransport(std::string endpoint, std::string api_key);
    static std::unique_ptr<HttpTransport> from_env();

    TransportResult complete(const std::string& prompt, const nlohmann::json& params) override;
    std::string identity() const override;

private:
    std::string endpoint_;
    std::string api_key_;
};

// Deterministic in-process transport for tests and offline runs. Echoes the
// prompt back, optionally failing the first `fail_times` calls per prompt.
class MockTransport : public Transport {
public:
    explicit MockTransport(int fail_times = 0, std::string prefix = "");

    TransportResult complete(const std::string& prompt, const nlohmann::json& params) override;
    std::string identity() const override;

    int calls() const { return calls_; }

private:
    int fail_times_;
    std::string prefix_;
    int calls_ = 0;
    std::map<std::string, int> failures_so_far_;
};

struct GenerationRecord {
    std::string job_id;
    std::string template_id;
    std::string topic;
    std::string group;
    std::string prompt;
    std::string response_text;
    std::size_t response_word_count = 0;
    std::string timestamp;
    int attempts = 0;
    std::string endpoint_digest;
    bool ok = false;
    std::string error;
};

struct GenerateOptions {
    std::string out_dir;
    std::size_t concurrency = 1;
    double min_request_interval_seconds = 0.0;
    bool resume = true;
    std::function<std::string()> timestamp_provider; // defaults to UTC now
    std::function<void(double)> sleeper;             // defaults to real sleep
};

struct GenerateResult {
    std::vector<GenerationRecord> records; // job order
    std::size_t succeeded = 0;
    std::size_t failed = 0;
    std::string manifest_path;
    std::string records_path;
    std::string failures_path;
};

// Writes texts/<job id>.txt per success, a corpus manifest covering the
// successes, records.jsonl, and failures.json. Resumable: jobs with an
// existing successful record are skipped.
GenerateResult generate_corpus(const std::vector<GenerationJob>& jobs,
                               Transport& transport,
                               const GenerateOptions& options);

struct LengthReport {
    std::string template_id;
    std::size_t n = 0;
    double mean_words = 0.0;
    std::size_t min_words = 0;
    std::size_t max_words = 0;
};

std::vector<LengthReport> length_report(const std::vector<GenerationRecord>& records);

} // namespace registra::genclient
