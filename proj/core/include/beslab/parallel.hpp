#pragma once

namespace beslab
{
    // Upper bound on worker threads used inside the library. Defaults to 1.
    auto worker_limit() -> unsigned;

    void set_worker_limit(unsigned n);
}
