#include "saxlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace saxlab {

unsigned thread_budget() {
    unsigned budget = std::thread::hardware_concurrency();
    if (budget == 0) budget = 1;
    if (const char* env = std::getenv("SAXLAB_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1 && cap < static_cast<long>(budget)) budget = static_cast<unsigned>(cap);
        } catch (...) {
            // unparsable value: keep the hardware default
        }
    }
    return budget;
}

} // namespace saxlab
