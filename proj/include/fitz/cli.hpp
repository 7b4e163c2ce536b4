#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace fitz::cli {

// Exit codes: 0 = computed (the verdict lives in the output), 2 = usage or
// parse error, 3 = input outside the criterion's hypotheses, 4 = internal
// invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitInvariant = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace fitz::cli
