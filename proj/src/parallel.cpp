#include "coalmanip/parallel.hpp"

#include <cstdlib>
#include <string>

namespace coalmanip {

int default_workers() {
    if (const char* env = std::getenv("COALMANIP_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace coalmanip
