#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace sdcd {

/// Seedable, splittable random stream. Every randomized component in the
/// library draws from one of these; multi-trial experiments derive one
/// independent stream per trial from (master_seed, trial_index) so that
/// figures reproduce exactly regardless of scheduling.
///
/// All distributions are implemented on top of the raw 64-bit output, so a
/// given seed yields the same draw sequence on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Stream for trial `stream_index` under `master_seed`.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t stream_index) {
    return RngStream(mix(master_seed) ^ mix(stream_index * 0x9e3779b97f4a7c15ULL + 1));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (no cached second deviate, so the
  /// consumed-uniform count per call is fixed).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Uniform index in [0, n).
  Eigen::Index uniform_index(Eigen::Index n) {
    return static_cast<Eigen::Index>(uniform01() * static_cast<double>(n)) % n;
  }

  /// Draws index i with probability p(i). `p` must be a simplex vector.
  Eigen::Index discrete(const Eigen::VectorXd& p) {
    const double u = uniform01();
    double acc = 0.0;
    Eigen::Index last = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0) continue;
      last = i;
      acc += p[i];
      if (u < acc) return i;
    }
    return last;  // u landed in the round-off tail
  }

  /// Uniformly random permutation of [0, m).
  std::vector<Eigen::Index> permutation(Eigen::Index m) {
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index i = m - 1; i > 0; --i) {
      const Eigen::Index j = uniform_index(i + 1);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
  }

  /// k distinct indices from [0, m), uniform without replacement.
  std::vector<Eigen::Index> sample_without_replacement(Eigen::Index m, Eigen::Index k) {
    auto perm = permutation(m);
    perm.resize(static_cast<std::size_t>(k));
    return perm;
  }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  // splitmix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace sdcd
