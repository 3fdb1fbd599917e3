#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hpt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMismatch = 3;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Runs one command. args excludes the program name. Output is written only
/// once the command has fully succeeded; failures print to err alone.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env);

}  // namespace hpt::cli
