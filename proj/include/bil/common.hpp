// common.hpp -- shared error type and small helpers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bil {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw error(msg);
}

// FNV-1a, used for input digests in reports.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace bil
