#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace bnba {

// Times are kept at microsecond resolution throughout; these two functions
// define the resolution boundary in one place.
inline double seconds_from_micros(std::int64_t micros) { return static_cast<double>(micros) / 1e6; }

inline std::int64_t micros_from_seconds(double seconds) {
  return static_cast<std::int64_t>(std::llround(seconds * 1e6));
}

// Fixed six-decimal rendering for time fields. A double that came from
// seconds_from_micros re-parses to the identical double.
inline std::string format_time(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

// Shortest round-trip rendering for objective values and CSV numbers.
inline std::string format_value(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Stateless 64-bit mixer; used for seeded per-node hashes so results depend
// on node identity, never on draw order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from a hash value.
inline double unit_from_hash(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace bnba
