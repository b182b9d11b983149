#include "dtembed/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace dtembed {

int effective_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("DTEMBED_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // unparsable value: ignore the cap
    }
  }
  return n;
}

}  // namespace dtembed
