#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triea::cli {

enum ExitCode : int {
    kOk = 0,
    kBadFlags = 2,
    kInputError = 3,
    kEmptyArchive = 4,
    kPlantOverlap = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name, e.g. {"run", "--input", "data.csv"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triea::cli
