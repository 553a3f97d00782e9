#include "matquot/parallel.hpp"

#include <atomic>

namespace matquot::par {

namespace {
std::atomic<int> g_jobs{0};
}

int jobs() { return g_jobs.load(); }

void set_jobs(int n) { g_jobs.store(n < 0 ? 0 : n); }

}  // namespace matquot::par
