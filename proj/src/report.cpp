#include "syzygy/report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace syzygy {

void RunConfig::validate() const {
    if (primes.empty()) throw std::invalid_argument("config: need at least one prime");
    for (uint32_t p : primes)
        if (p <= 1000 || p % 2 == 0)
            throw std::invalid_argument("config: primes must be odd and > 1000");
    if (threads < 1) throw std::invalid_argument("config: threads >= 1");
}

Report::Report(std::string command, const RunConfig& cfg) {
    j_["schema_version"] = 1;
    j_["command"] = std::move(command);
    j_["inputs"] = nlohmann::ordered_json::object();
    j_["inputs"]["primes"] = cfg.primes;
    j_["inputs"]["seed"] = cfg.seed;
    j_["results"] = nlohmann::ordered_json::object();
    j_["flags"] = nlohmann::ordered_json::array();
    j_["timings_ms"] = nlohmann::ordered_json::object();
}

void Report::flag(const std::string& f) {
    j_["flags"].push_back(f);
    flagged_ = true;
}

void Report::fail(const std::string& why) {
    j_["flags"].push_back("FAIL: " + why);
    ok_ = false;
}

void Report::timing(const std::string& key, double ms) { j_["timings_ms"][key] = ms; }

int Report::finish(const RunConfig& cfg, bool print_json_to_stdout) {
    j_["ok"] = ok_ && !flagged_;
    if (!cfg.json_path.empty()) {
        std::ofstream out(cfg.json_path);
        if (!out) throw std::runtime_error("cannot write " + cfg.json_path);
        out << j_.dump(2) << "\n";
    }
    if (print_json_to_stdout) std::cout << j_.dump(2) << std::endl;
    return (ok_ && !flagged_) ? 0 : 1;
}

} // namespace syzygy
