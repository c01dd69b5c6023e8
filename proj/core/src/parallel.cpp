#include <beslab/parallel.hpp>

#include <atomic>

namespace beslab
{
    namespace
    {
        std::atomic<unsigned> limit{1};
    }

    auto worker_limit() -> unsigned
    {
        return limit.load();
    }

    void set_worker_limit(unsigned n)
    {
        limit.store(n == 0 ? 1 : n);
    }
}
