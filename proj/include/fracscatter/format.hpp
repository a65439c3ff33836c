#pragma once

#include <array>
#include <charconv>
#include <string>

namespace fracscatter
{
/// Shortest decimal string that parses back to the same double.
inline std::string format_double(double v)
{
  std::array<char, 64> buf{};
  auto const res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

} // namespace fracscatter
