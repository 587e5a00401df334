#pragma once

#include <cstdio>
#include <string>

namespace owc {

// 17 significant digits: enough for exact double round-trips, so rereading
// any output reproduces values bit-for-bit.
inline std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Short form for file names and labels (snapshot times, step heights).
inline std::string gshort(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace owc
