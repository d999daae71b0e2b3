#include "octic/parallel.hpp"

namespace octic {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_jobs(unsigned n) { g_jobs = n; }

unsigned jobs() {
    unsigned n = g_jobs;
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

}  // namespace octic
