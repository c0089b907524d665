#pragma once

#include <ostream>
#include <string>

namespace bubble {

// Runs the invariant suite at desk-check sizes, one line per invariant.
// Returns true when every invariant holds.
bool run_check_suite(std::ostream& out);

}  // namespace bubble
