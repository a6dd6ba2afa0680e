#ifndef FUETER_COMMANDS_HPP
#define FUETER_COMMANDS_HPP

// The command-line drivers as plain functions. Each returns its JSON report,
// the files it wants written, and an exit status; nothing here touches the
// filesystem, so tests can call the commands directly.

#include "fueter/io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fueter {

/// Invalid flags or flag combinations.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 1;
    int k = 2;
    int degree = 3;
    std::uint64_t seed = 0;
    int trials = 20;
    std::string output_path;  ///< report file for verify-*/solve, output directory for basis/kernel
    std::string input_path;   ///< solve only
};

/// Throws UsageError describing the first invalid field.
void validate(const RunConfig& cfg);

struct CommandOutput {
    int status = 0;  ///< 0 iff every check passed
    Json report;
    std::vector<std::pair<std::string, std::string>> files;  ///< (file name, contents)
};

CommandOutput cmd_verify_identities(const RunConfig& cfg);
CommandOutput cmd_verify_estimates(const RunConfig& cfg);
CommandOutput cmd_basis(const RunConfig& cfg);
CommandOutput cmd_kernel(const RunConfig& cfg);
/// `input` is the JSON text of a V1 section; its n and k override the config.
CommandOutput cmd_solve(const RunConfig& cfg, const std::string& input);

/// CSV "degree,dimension,cumulative".
std::string dimension_csv(const std::vector<DimensionRow>& rows);

/// Canonical JSON text (2-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace fueter

#endif  // FUETER_COMMANDS_HPP
