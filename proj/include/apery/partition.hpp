#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace apery {

/// Parts sorted non-increasing with zeros dropped.
inline std::vector<std::int64_t> as_partition(std::span<const std::int64_t> parts) {
  std::vector<std::int64_t> out;
  for (auto x : parts)
    if (x > 0) out.push_back(x);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Transpose of the Young diagram: part j counts parts of `p` exceeding j.
inline std::vector<std::int64_t> conjugate(std::span<const std::int64_t> parts) {
  auto p = as_partition(parts);
  std::vector<std::int64_t> out;
  if (p.empty()) return out;
  out.resize(static_cast<std::size_t>(p.front()), 0);
  for (auto x : p)
    for (std::int64_t j = 0; j < x; ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace apery
