#pragma once

#include <cstdint>
#include <random>

namespace harmolat {

/// Reproducible uniform draws. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the mapping to [0, 1) takes the top
/// 53 bits (std::uniform_real_distribution is implementation-defined and
/// would break cross-platform reproducibility).
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace harmolat
