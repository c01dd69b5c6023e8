#pragma once

#include <istream>
#include <ostream>

namespace beslab::cli
{
    // Exit codes: 0 success or certified, 1 not free, uncertified or over the search cap, 2 usage error.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err, std::istream & in) -> int;
}
