#include "cli_runner.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>

namespace {

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::string& env) {
    std::string command = env.empty() ? "" : env + " ";
    command += quote(CLEANTRI_CLI_PATH);
    for (const auto& a : args) command += " " + quote(a);
    command += " 2>/dev/null";

    CliResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}
