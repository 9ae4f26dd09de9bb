#include "eigenbound/cli/parallel.hpp"

#include <cstdlib>
#include <string>

namespace eigenbound::cli {

unsigned thread_count() {
  if (const char* env = std::getenv("EIGENBOUND_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace eigenbound::cli
