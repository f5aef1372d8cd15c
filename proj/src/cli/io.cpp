#include <cstdio>
#include <fstream>
#include <sstream>

#include "lac/cli.hpp"

namespace lac::cli {

std::string hash_json(const nlohmann::json& j) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return nlohmann::json::parse(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

LineCombinatorics load_combinatorics(const std::string& arg) {
    for (const auto& name : builtin_names())
        if (name == arg) return builtin(arg);
    return comb_from_json(read_json_file(arg));
}

}  // namespace lac::cli
