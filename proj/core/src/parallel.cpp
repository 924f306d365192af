#include "szego/parallel.hpp"

#include <cstdlib>
#include <string>

namespace szego {

std::size_t worker_count() {
    std::size_t cap = 0;
    if (const char* env = std::getenv("SZEGO_FRAMES_THREADS")) {
        try {
            cap = static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            cap = 0;
        }
    }
    if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
    return cap;
}

}  // namespace szego
