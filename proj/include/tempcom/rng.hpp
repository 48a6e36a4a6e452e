#pragma once

// Seeded random streams.
//
// Every random draw in tempcom comes from an Rng built on std::mt19937_64,
// whose output sequence is fully specified by the C++ standard. Seeds for
// independent work units are derived from a master seed and a path of
// integers (replicate index, snapshot index, bootstrap index, ...) by
// folding each path element through SplitMix64. A work unit therefore owns
// its own stream, and results do not depend on scheduling order.
//
// Variates are produced by hand-written transforms rather than
// std::*_distribution, whose algorithms are implementation-defined.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace tempcom {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(master);
  for (auto p : path) h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
  return h;
}

// Stream tags keep seeds of different consumers apart.
namespace stream {
inline constexpr std::uint64_t generate = 1;
inline constexpr std::uint64_t static_test = 2;
inline constexpr std::uint64_t bootstrap = 3;
inline constexpr std::uint64_t lanczos = 4;
}  // namespace stream

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log argument.
  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Unbiased integer in [0, bound) (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Number of failures before the next success of a Bernoulli(p) sequence,
  // given log1m_p = log(1 - p). Requires 0 < p < 1.
  std::uint64_t geometric_skip(double log1m_p) {
    const double g = std::floor(std::log(uniform_pos()) / log1m_p);
    if (!(g < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(g);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tempcom
