#pragma once

// Test-only helpers: independent brute-force routes and a CLI runner.
// Nothing here may call into the fast paths it is used to check.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testing {

// Plain iterative Fibonacci residue walk; the route the doubling kernel is
// judged against.
inline std::uint64_t iter_fib_mod(std::uint64_t n, std::uint64_t k) {
    std::uint64_t a = 0, b = 1 % k;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t c = (a + b) % k;
        a = b;
        b = c;
    }
    return a;
}

inline std::uint64_t iter_lucas_mod(std::uint64_t n, std::uint64_t k) {
    std::uint64_t a = 2 % k, b = 1 % k;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t c = (a + b) % k;
        a = b;
        b = c;
    }
    return a;
}

// Deliberately different constants from the library's sampler.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 2862933555777941757ull + 3037000493ull;
        return state;
    }
};

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

#ifdef FIBDIV_CLI_PATH
inline CliResult run_cli(const std::string& args) {
    char out_path[] = "/tmp/fibdiv_test_out_XXXXXX";
    char err_path[] = "/tmp/fibdiv_test_err_XXXXXX";
    int out_fd = mkstemp(out_path);
    int err_fd = mkstemp(err_path);
    if (out_fd >= 0) close(out_fd);
    if (err_fd >= 0) close(err_fd);

    const std::string cmd = std::string(FIBDIV_CLI_PATH) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    unlink(out_path);
    unlink(err_path);
    return result;
}
#endif

}  // namespace testing
