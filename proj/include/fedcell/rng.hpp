#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

namespace fedcell::rng {

// SplitMix64 step; used both as a generator primitive and as a seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives an independent stream key from the master seed and a tag tuple
// (purpose id, client index, round index, ...). Streams for distinct tag
// tuples are independent, so per-client work can run in any order or in
// parallel without perturbing determinism.
inline std::uint64_t derive_key(std::uint64_t master,
                                std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = master ^ 0xA0761D6478BD642Full;
  splitmix64(s);
  for (std::uint64_t t : tags) {
    s ^= t + 0x8EBC6AF09C88C6E3ull;
    splitmix64(s);
  }
  return splitmix64(s);
}

// Stream purposes. Keep values stable: they are part of the determinism
// contract (same seed => bit-identical outputs).
namespace purpose {
constexpr std::uint64_t profile = 1;
constexpr std::uint64_t fading = 2;
constexpr std::uint64_t labels = 3;
constexpr std::uint64_t partition = 4;
constexpr std::uint64_t data = 5;
constexpr std::uint64_t model_init = 6;
constexpr std::uint64_t batch = 7;
constexpr std::uint64_t ga = 8;
constexpr std::uint64_t select = 9;
constexpr std::uint64_t allocate = 10;
constexpr std::uint64_t test_data = 11;
constexpr std::uint64_t task = 12;
}  // namespace purpose

// Deterministic random stream with hand-rolled distributions. The standard
// <random> distributions are implementation-defined, which would break the
// byte-identical reproducibility contract across toolchains, so everything
// is derived from raw 64-bit draws here.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : engine_(key) {}
  Stream(std::uint64_t master, std::initializer_list<std::uint64_t> tags)
      : engine_(derive_key(master, tags)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("rng: inverted interval");
    if (lo == hi) return lo;
    return lo + uniform01() * (hi - lo);
  }

  // Inclusive integer range via rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("rng: inverted integer interval");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return lo + static_cast<std::int64_t>(v % span);
  }

  // Unit-mean exponential (Rayleigh fading power).
  double exponential() {
    double u = uniform01();
    return -std::log1p(-u);
  }

  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    // Box-Muller; u1 bounded away from 0.
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0x1.0p-60) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

  // Marsaglia-Tsang; alpha < 1 handled with the boost trick.
  double gamma(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("rng: gamma alpha <= 0");
    if (alpha < 1.0) {
      const double u = uniform01();
      return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v;
    }
  }

  std::vector<double> dirichlet(double alpha, std::size_t n) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& v : w) {
      v = gamma(alpha);
      sum += v;
    }
    if (sum <= 0.0) {  // pathological underflow; fall back to uniform
      for (auto& v : w) v = 1.0 / static_cast<double>(n);
      return w;
    }
    for (auto& v : w) v /= sum;
    return w;
  }

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace fedcell::rng
