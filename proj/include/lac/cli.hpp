#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lac/combinatorics.hpp"

namespace lac::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { pass = 0, fail = 1, inconclusive = 2, usage = 3 };

// Stage failures carry the stage name.
struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage(stage) {}
    std::string stage;
};

struct RunReport {
    nlohmann::json body;  // deterministic for fixed inputs and seed
    nlohmann::json timings = nlohmann::json::object();
    int exit_code = inconclusive;
    std::string conclusion;
};

struct RunOptions {
    uint64_t seed = 1;
    unsigned jobs = 1;
    bool self_compare = false;
};

// maclane | rybnikov
RunReport cmd_reproduce(const std::string& target, const RunOptions& opt = {});

// FNV-1a over the compact JSON dump, as 16 hex digits.
std::string hash_json(const nlohmann::json& j);
// A builtin name or a path to a JSON file.
LineCombinatorics load_combinatorics(const std::string& arg);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lac::cli
