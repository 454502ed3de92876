#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncproj/harness/codec.hpp"

namespace ncproj::harness {

enum class SkipPolicy { Count, Fail };

struct SuiteConfig {
    std::string suite;
    RingSpec ring;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    SkipPolicy skip_policy = SkipPolicy::Count;
    double skip_ceiling = 0.05;  // fraction of trials
    unsigned jobs = 1;
};

void validate(const SuiteConfig& cfg);

struct Failure {
    std::uint64_t counter;            // trial index; trials itself marks the skip-ceiling record
    std::optional<double> residual;   // empty when the trial raised
    json inputs;
};

struct Report {
    std::string suite;
    std::string ring;
    std::uint64_t trials_run = 0;      // trials that reached a verdict
    std::uint64_t trials_skipped = 0;  // degenerate samples under skip_policy = count
    double max_residual = 0.0;
    std::vector<Failure> failures;
    bool pass = true;
    double wall_time = 0.0;  // seconds
};

json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace ncproj::harness
