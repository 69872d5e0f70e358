#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace fbpick {

// mt19937_64 is pinned by the standard; the std distributions are not, so all
// mappings from raw draws to floats are done by hand.

inline double uniform01(std::mt19937_64& gen) {
  return double(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

// Box-Muller pair cache.
class Gaussian {
 public:
  double operator()(std::mt19937_64& gen) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(gen);
    double u2 = uniform01(gen);
    while (u1 <= 1e-300) u1 = uniform01(gen);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Fisher-Yates with hand-rolled bounded draw (rejection-free modulo is fine
// for the index ranges used here).
template <class Vec>
void shuffle_indices(Vec& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = std::size_t(gen() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace fbpick
