#pragma once

#include <ostream>

namespace nilmprof::cli {

// Recomputes the published summary tables from the embedded catalog and
// diffs each cell against the printed value. Returns the number of gated
// mismatches (0 on a healthy build). Cells whose printed values are known
// to disagree with their own set data are reported as notes and never
// count as failures; see the README for the list.
int run_tables(std::ostream& out);

}  // namespace nilmprof::cli
