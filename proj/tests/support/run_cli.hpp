#pragma once

// Spawn the ipent binary and capture exit code + stdout. The binary location
// and the corpus directory come in through compile definitions.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace ipent_test {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(IPENT_BINARY_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string corpus_path(const std::string& rel) {
    return std::string(IPENT_CORPUS_DIR) + "/" + rel;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ipent_test
