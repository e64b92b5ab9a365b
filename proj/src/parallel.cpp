#include "boomtab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace boomtab {

unsigned worker_count() {
    if (const char* env = std::getenv("BOOMTAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace boomtab
