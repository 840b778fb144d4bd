#pragma once

#include <filesystem>
#include <ostream>

namespace ore {

/// Exit codes: 0 success, 1 a task raised an error, 2 usage or parse error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Directory holding the shipped example specs.
std::filesystem::path shipped_spec_dir();

}  // namespace ore
