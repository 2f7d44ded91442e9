#pragma once

// Minimal popen wrapper for the CLI end-to-end tests.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct run_result {
    int exit_code = -1;
    std::string output;
};

// Runs cmd under /bin/sh, capturing stdout; callers add their own stderr
// redirections when they want that stream instead.
inline run_result run(const std::string& cmd)
{
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed for: " + cmd);
    run_result r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.output.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace subprocess
