#pragma once

#include <string>
#include <vector>

#include "ncproj/harness/report.hpp"

namespace ncproj::harness {

struct SuiteInfo {
    std::string name;
    bool commutative_only;
    std::string summary;
};

const std::vector<SuiteInfo>& suite_list();

// Throws UnknownSuite, UnsupportedRingForSuite, or ParseError for a bad config.
Report run_suite(const SuiteConfig& cfg);

}  // namespace ncproj::harness
