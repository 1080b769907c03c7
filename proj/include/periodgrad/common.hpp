// Shared basics: row-major matrix container, error types, logging, rng streams.
#ifndef PERIODGRAD_COMMON_HPP
#define PERIODGRAD_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace periodgrad {

// Thrown for bad user-supplied configuration; the CLI maps it to exit code 2.
// Everything else (I/O failures, numeric blowups) is a plain runtime_error -> exit 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Row-major dense matrix. Rows are contiguous, which is what the kernels want:
// channel-major buffers are Grid(channels, n_samples).
template <typename T>
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int r, int c, T fill = T(0)) : rows(r), cols(c), data(size_t(r) * c, fill) {}

  T* row(int r) { return data.data() + size_t(r) * cols; }
  const T* row(int r) const { return data.data() + size_t(r) * cols; }
  T& at(int r, int c) { return data[size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return data[size_t(r) * cols + c]; }
  size_t size() const { return data.size(); }
  void fill(T v) { std::fill(data.begin(), data.end(), v); }
};

using MatF = Grid<float>;
using MatD = Grid<double>;

// Log levels selected by env var PERIODGRAD_LOG in {error, info, debug}; default info.
enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };
LogLevel log_level();
void log_msg(LogLevel lvl, const std::string& msg);
inline void log_info(const std::string& msg) { log_msg(LogLevel::kInfo, msg); }
inline void log_debug(const std::string& msg) { log_msg(LogLevel::kDebug, msg); }
inline void log_error(const std::string& msg) { log_msg(LogLevel::kError, msg); }

// splitmix64; used to derive independent per-work-item rng streams from (seed, index).
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed, uint64_t index = 0) { return Rng(mix_seed(seed, index)); }

// Deterministic standard normal draw (Box-Muller on the rng's uniforms).
// std::normal_distribution is avoided in anything whose bytes reach disk:
// its draw count per sample is implementation defined, this one is pinned.
inline double draw_normal(Rng& rng) {
  // (0,1] uniforms so log() stays finite.
  double u1 = (double(rng() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
  double u2 = double(rng() >> 11) * (1.0 / 9007199254740992.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  double u = double(rng() >> 11) * (1.0 / 9007199254740992.0);
  return lo + (hi - lo) * u;
}

// Run fn(i) for i in [begin, end) on up to `jobs` threads. Work is partitioned
// by index so results never depend on the thread count. jobs <= 1 runs inline.
void parallel_for(int begin, int end, int jobs, const std::function<void(int)>& fn);

}  // namespace periodgrad

#endif  // PERIODGRAD_COMMON_HPP
