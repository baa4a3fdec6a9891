#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdmat {

/// Runs the command-line tool on the given arguments (no program name).
/// Exit codes: 0 success, 1 validation failure, 2 parse or usage error,
/// 3 property violated, 4 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

/// One documented invocation per library operation; used to audit that every
/// operation stays reachable from the command line. "{DIR}" inside an
/// argument stands for the fixture directory.
struct OpCoverage {
    const char* operation;
    std::vector<std::string> argv;
};

const std::vector<OpCoverage>& cli_coverage();

} // namespace mdmat
