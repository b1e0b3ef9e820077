#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mspin/core_types.hpp"

namespace mspin {

/// The ten signatures of the default verification grid.
std::vector<SurfaceSignature> default_grid();

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification
/// verdict is false, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mspin
