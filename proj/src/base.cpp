#include "letterkit/base.hpp"

#include <cstdlib>
#include <string>

namespace letterkit {

namespace {

int env_override() {
  static const int value = [] {
    const char* s = std::getenv("LETTERKIT_MAX_N");
    if (s == nullptr || *s == '\0') return -1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 0) return -1;
    return static_cast<int>(v < kMaxVertices ? v : kMaxVertices);
  }();
  return value;
}

}  // namespace

int effective_cap(int default_cap) {
  int env = env_override();
  return env >= 0 ? env : default_cap;
}

void require_cap(int n, int default_cap, const char* what) {
  int cap = effective_cap(default_cap);
  if (n > cap) {
    throw CapError(std::string(what) + ": size " + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace letterkit
