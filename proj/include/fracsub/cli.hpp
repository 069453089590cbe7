#pragma once

#include <string>
#include <vector>

namespace fracsub {

// Parse and dispatch one command-line invocation (argv without the program
// name).  Writes artifacts under --out (default: timestamped directory),
// refuses to overwrite without --force, emits a machine-readable error JSON
// on stderr and returns nonzero on any failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace fracsub
