#include "hwcns/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hwcns {

int default_worker_count() {
  const char* env = std::getenv("HWCNS_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int n = std::stoi(env);
    return n > 0 ? n : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace hwcns
