// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "chaintwin/types.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace chaintwin
{

// Named, seeded random stream. Streams for different concerns (topology,
// bandwidth, workload, drops, ...) are derived independently so varying one
// concern never perturbs the draws of another. Distributions are implemented
// by hand on top of mt19937_64 because the standard library's distribution
// objects are not bit-stable across implementations.
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::string_view label);

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform();
    // uniform in (0, 1]; safe as a log() argument
    double uniform_pos();
    // uniform integer in [0, bound); bound must be nonzero
    std::uint64_t uniform_int(std::uint64_t bound);
    // Box-Muller; the spare value is cached, so draw counts depend only on
    // call order
    double normal(double mean, double std);
    // exponential with the given mean
    double exponential(double mean);

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Stable seed derivation for sub-experiments (sweep repeats, drop sets).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                          std::uint64_t b = 0);

} // namespace chaintwin
