#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entropygraph::checks {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool soft = false; // trend report: logged, never fails the run
    double seconds = 0;
    double time_limit = 0;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Criterion ids in order (1..14).
std::vector<int> check_ids();
std::string check_name(int id);

/// Runs one acceptance criterion; the per-check seed is derived from base_seed.
/// A hard check fails when its assertion fails or it overruns its time limit.
CheckResult run_check(int id, std::uint64_t base_seed = kDefaultSeed);

/// "PASS c03 name (0.12 s): detail"
std::string format_line(const CheckResult& r);

/// CSV with header id,name,verdict,soft,seconds,time_limit,detail.
std::string to_csv(const std::vector<CheckResult>& results);

} // namespace entropygraph::checks
