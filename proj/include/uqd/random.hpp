#pragma once

#include <cstdint>
#include <random>

namespace uqd {

// Reproducibility contract
// ------------------------
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Every variate below is derived from raw engine words with
// hand-written transforms, so results do not depend on the standard
// library's (implementation-defined) distribution classes:
//
//   uniform01      ((w >> 11) + 0.5) * 2^-53, open interval (0, 1)
//   standard_normal  Marsaglia polar method, second value discarded
//   gamma(shape)   Marsaglia-Tsang squeeze for shape >= 1; for shape < 1
//                  the log of Gamma(shape + 1) * U^(1/shape)
//
// Sub-streams (per replication, per mixture component) are seeded through
// derive_seed, a splitmix64 finalizer over (seed, stream).

/// Caller-owned pseudo random state. Copyable; copies replay the same stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01();
    double standard_normal();

    /// log of a Gamma(shape, 1) variate. Working in log space keeps very
    /// small shapes from underflowing to an all-zero Dirichlet draw.
    double log_gamma_variate(double shape);

  private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace uqd
