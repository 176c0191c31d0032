#ifndef ZRISK_UTIL_HPP_
#define ZRISK_UTIL_HPP_

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

namespace zrisk {

/// Round half-up to `places` decimals (0.005 -> 0.01 at 2 places).
[[nodiscard]] inline double round_half_up(double x, int places) {
  const double p = std::pow(10.0, places);
  return std::floor(x * p + 0.5) / p;
}

/// Fixed-point decimal formatting after half-up rounding.
[[nodiscard]] inline std::string format_fixed(double x, int places) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << round_half_up(x, places);
  return out.str();
}

/// FNV-1a 64-bit hash, used for input-file digests in report metadata.
[[nodiscard]] inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

[[nodiscard]] inline std::string fnv1a64_hex(std::string_view bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return out.str();
}

}  // namespace zrisk

#endif  // ZRISK_UTIL_HPP_
