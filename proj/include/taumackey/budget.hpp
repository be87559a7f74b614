#pragma once

#include <cstddef>

namespace taumackey {

/// Resource limits for the quadratic scans. All overridable from the CLI.
struct Budget {
  std::size_t max_order = 20000;
  std::size_t max_pairs = 4'000'000;
  std::size_t max_classes = 200;
};

}  // namespace taumackey
