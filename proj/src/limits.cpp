#include "quasicut/limits.hpp"

#include <cstdlib>
#include <string>

namespace quasicut {

static Limits read_limits() {
  Limits lim;
  if (const char* env = std::getenv("QUASICUT_MAX_N")) {
    try {
      int n = std::stoi(env);
      if (n > 0) {
        lim.max_n = n;
        lim.lp_max_n = n;
      }
    } catch (...) {
      // ignore malformed values, keep defaults
    }
  }
  return lim;
}

const Limits& limits() {
  static const Limits lim = read_limits();
  return lim;
}

}  // namespace quasicut
