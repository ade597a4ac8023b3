#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace syzygy {

struct RunConfig {
    std::vector<uint32_t> primes{32003, 31013};
    uint64_t seed = 1;
    int threads = 1;
    std::string json_path;  // empty: stdout text only
    std::string cache_dir;  // empty: no tensor cache

    void validate() const;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Schema-versioned report envelope; deterministic modulo the timings block.
class Report {
public:
    Report(std::string command, const RunConfig& cfg);

    nlohmann::ordered_json& body() { return j_["results"]; }
    nlohmann::ordered_json& inputs() { return j_["inputs"]; }

    void flag(const std::string& f);
    void fail(const std::string& why);
    void timing(const std::string& key, double ms);

    bool ok() const { return ok_; }
    const nlohmann::ordered_json& json() const { return j_; }

    // Writes JSON (if configured) and returns the exit code: 0 iff no check
    // failed and no flag was raised.
    int finish(const RunConfig& cfg, bool print_json_to_stdout = false);

private:
    nlohmann::ordered_json j_;
    bool ok_ = true;
    bool flagged_ = false;
};

} // namespace syzygy
