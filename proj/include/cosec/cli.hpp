#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cosec::cli {

// Exit codes: 0 success, 1 verification/containment failure,
// 2 domain error, 3 numeric nonconvergence.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosec::cli
