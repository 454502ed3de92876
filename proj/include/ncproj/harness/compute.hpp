#pragma once

#include <string>
#include <vector>

#include "ncproj/harness/codec.hpp"

namespace ncproj::harness {

struct OpInfo {
    std::string name;
    std::string input;  // expected input fields
};

const std::vector<OpInfo>& op_list();

// Runs one operation on a parsed input document. Indices in the input are
// 1-based. Throws UnknownOperation, ParseError, or the operation's own error.
json compute(const std::string& op, const json& input);

}  // namespace ncproj::harness
