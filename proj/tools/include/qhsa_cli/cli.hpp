#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qhsa::cli {

enum ExitCode : int {
    exit_pass = 0,
    exit_check_failed = 1,
    exit_input_error = 2,
};

/// Runs the command line (without the program name) and returns the exit code.
/// Reports go to out (or --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Resolves an input path: as given if it exists, otherwise relative to the
/// fixture directory ($QHSA_FIXTURE_DIR, else the bundled fixtures).
std::filesystem::path resolve_input(const std::string& path);

} // namespace qhsa::cli
