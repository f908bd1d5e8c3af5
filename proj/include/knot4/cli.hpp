#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knot4::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitClaimFailed = 2;

// args excludes the program name. Normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

// 17 significant digits, "nan" for non-finite values.
std::string format_number(double x);

}  // namespace knot4::cli
