#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace curvlab {

enum class Tier { Fast, Full };

Tier parse_tier(const std::string& text);
std::string to_string(Tier tier);

struct AcceptanceOptions {
    Tier tier = Tier::Fast;
    std::uint64_t seed = 20240601;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9). Exceptions raised while checking are
/// reported as failures, never propagated.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs every criterion in order, calling `on_result` after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  lamplighter positive curvature  (0.41 s)  detail"
std::string format_line(const CriterionResult& result);

}  // namespace curvlab
