#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace windflex {

/// Raised when input data fails structural or physical validation.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a model/operation precondition is violated at runtime.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by the optimization layer (infeasible, stalled, limit hit).
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic substream derivation: the stream for a (scenario, step)
// cell depends only on (seed, a, b, c), never on draw order. Parallel and
// serial sampling therefore agree bit-for-bit.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t a,
                               std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = mix64(seed ^ 0x5851f42d4c957f2dull);
  s = mix64(s ^ mix64(a ^ 0xd1342543de82ef95ull));
  s = mix64(s ^ mix64(b ^ 0xaf251af3b0f025b5ull));
  s = mix64(s ^ mix64(c ^ 0xb564ef22ec7aece8ull));
  return s;
}

inline std::mt19937_64 engine(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0, std::uint64_t c = 0) {
  return std::mt19937_64(substream(seed, a, b, c));
}

/// Uniform double in [0, 1). Hand-rolled so results do not depend on the
/// standard library's distribution implementation.
inline double u01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform double in the open interval (0, 1); safe for inverse-CDF use.
inline double u01_open(std::mt19937_64& g) {
  double u = u01(g);
  return u > 0.0 ? u : 0x1.0p-53;
}

/// Uniform integer in [0, n).
inline std::size_t uindex(std::mt19937_64& g, std::size_t n) {
  return static_cast<std::size_t>(u01(g) * static_cast<double>(n)) % n;
}

}  // namespace rng

}  // namespace windflex
