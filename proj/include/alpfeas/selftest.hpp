#pragma once

#include <iosfwd>
#include <string>

namespace alpfeas {

/// The built-in P=2, Q=2, R=3 template system over x1..x3 used by the
/// shape checks and the docs.
const char* worked_example_lsys();

/// Runs the embedded invariant suite (determinants, case counts, field
/// axioms, sign-case foundation, worked-example shape) and prints one
/// table line per check. Returns 0 iff everything passed.
int run_selftest(std::ostream& os);

} // namespace alpfeas
