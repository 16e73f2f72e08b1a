#include "xtropy/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace xtropy {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("XTROPY_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

}  // namespace xtropy
