#pragma once

#include <iosfwd>

namespace kst::selftest {

// Golden-value suite of published reference computations. Prints one line per
// check; returns the number of failures.
int run(std::ostream& out);

}  // namespace kst::selftest
