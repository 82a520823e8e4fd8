#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubisym::cli {

/// Exit codes: 0 success, 1 input error, 2 catalog discrepancy not in the
/// known ledger (or a failing property suite under selftest).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace cubisym::cli
