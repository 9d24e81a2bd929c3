#include "hooksum/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace hooksum {

unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HOOKSUM_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1)
            n = std::min<unsigned long>(n, cap);
    }
    return n;
}

}  // namespace hooksum
