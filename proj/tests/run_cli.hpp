#pragma once

// Runs the mtori executable and captures stdout, stderr and exit status.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mtori::testing {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string shell_quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s)
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

/// `stdin_text`, when given, is fed through a temporary file.
inline CliResult run_cli(const std::string& exe, const std::vector<std::string>& args,
                         const std::string* stdin_text = nullptr)
{
    char err_path[] = "/tmp/mtori_cli_err_XXXXXX";
    const int err_fd = mkstemp(err_path);
    if (err_fd >= 0)
        close(err_fd);
    std::string in_path;
    std::string cmd = shell_quote(exe);
    for (const std::string& a : args)
        cmd += " " + shell_quote(a);
    if (stdin_text) {
        char tmp[] = "/tmp/mtori_cli_in_XXXXXX";
        const int fd = mkstemp(tmp);
        if (fd >= 0) {
            [[maybe_unused]] const auto n = write(fd, stdin_text->data(), stdin_text->size());
            close(fd);
        }
        in_path = tmp;
        cmd += " < " + shell_quote(in_path);
    }
    cmd += " 2> " + shell_quote(err_path);

    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err_path);
    std::remove(err_path);
    if (!in_path.empty())
        std::remove(in_path.c_str());
    return r;
}

struct GoldenCase {
    std::string document;
    std::string command;
    int status = 0;
};

inline std::vector<GoldenCase> read_golden_cases(const std::string& dir)
{
    std::vector<GoldenCase> cases;
    std::istringstream in(slurp(dir + "/cases.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        GoldenCase c;
        fields >> c.document >> c.command >> c.status;
        cases.push_back(c);
    }
    return cases;
}

}  // namespace mtori::testing
