#include "kummerlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace kummerlab {

unsigned default_workers() {
  const char* env = std::getenv("KUMMERLAB_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const long v = std::stol(env);
    if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  return 1;
}

}  // namespace kummerlab
