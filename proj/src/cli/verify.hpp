#pragma once

#include <ostream>

namespace floq::cli {

// Cross-oracle verification suite.  Prints one line per check; returns the
// number of failed checks (0 on full success).  A positive `tol_override`
// replaces each check's default tolerance (tightening it beyond machine
// precision is a documented expected-failure mode).
int verify_all(std::ostream& os, double tol_override = -1.0);

}  // namespace floq::cli
