#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace vqc::cli {

enum class Method { lattice, spectral, recursion, all };
enum class Format { json, csv, pretty };

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_disagreement = 2,
    exit_residual = 3,
};

// Bad parameters or malformed input; reported with exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int n = 0;
    int k = 0;
    int big_n = 0;
    Method method = Method::lattice;
    Format format = Format::json;
    std::string cache_dir;  // empty disables the cache
    int threads = 1;
    std::optional<double> tolerance;

    std::string lhs;
    std::string rhs;
    std::string suite;
    std::string tableau;
    std::string tableau_file;
    std::string word;
    std::string multipartition;
    bool trace = false;
};

// Largest n + k accepted by the spectral methods.
inline constexpr int kSpectralMaxSize = 12;

// Bumped whenever the cached table layout or any table algorithm changes.
inline constexpr int kCacheVersion = 1;

const char* method_name(Method m);
Method parse_method(const std::string& text);
Format parse_format(const std::string& text);

}  // namespace vqc::cli
