#include "splitspecies/parallel.hpp"

#include <cstdlib>
#include <string>

namespace splitspecies {

int worker_count() {
  if (const char* env = std::getenv("SPLIT_SPECIES_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace splitspecies
