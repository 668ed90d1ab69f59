#pragma once

#include <cstdint>
#include <random>

namespace zeno {

/// Standard normal deviates from std::mt19937_64 (whose output sequence is
/// fixed by the C++ standard) via the Box-Muller transform. Unlike
/// std::normal_distribution, the mapping is the same on every standard
/// library, so seeded data sets are reproducible across platforms.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  /// Uniform on [0, 1) from the top 53 bits.
  double uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace zeno
