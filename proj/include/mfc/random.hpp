#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mfc {

/// Seeded generator with implementation-independent derived draws. The engine
/// is std::mt19937_64, whose output sequence the C++ standard fixes; the
/// standard distributions are avoided because their algorithms are not fixed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Fisher-Yates from the back.
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mfc
