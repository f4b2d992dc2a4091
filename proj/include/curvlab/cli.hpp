#pragma once

#include "curvlab/metric.hpp"
#include "curvlab/transport.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace curvlab {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Environment variable naming the default BFS cache directory.
inline constexpr const char* kCacheEnv = "CURVLAB_CACHE_DIR";

/// Every knob of a run. Defaults are the documented CLI defaults; a
/// horizon of -1 means "derive the smallest sufficient horizon".
struct RunConfig {
    std::string group = "L2";
    std::string element;
    int radius = 1;
    std::string mode = "sphere";
    int horizon = -1;
    std::size_t budget = kDefaultElementBudget;
    std::string cache;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string tier = "fast";

    int max_depth = 12;
    std::string base;             ///< transport basepoint x; empty means the identity
    std::size_t cap = kDefaultOptimaCap;
    int sample_radius = 3;
    std::size_t samples = 0;      ///< 0 probes every element of the sample ball
    int max_length = 40;
    int criterion = 0;            ///< 0 runs every criterion

    /// Throws DomainError naming the first invalid field.
    void validate() const;
};

/// Runs the tool with `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvlab
