#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace nmctl {

enum ExitCode : int { kOk = 0, kIoError = 1, kConfigError = 2, kInfeasible = 3 };

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "auto" (nullopt), a plain number, or a multiple of pi such as
// "0.2pi", "-pi", "pi/2", "3pi/4". Throws nmc::ConfigError otherwise.
std::optional<double> parse_angle(std::string_view text);

// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nmctl
