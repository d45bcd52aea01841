// Copyright 2026 the chaintwin contributors. Licensed under the Apache
// License, Version 2.0. See the LICENSE file at the root of this distribution
// or at http://www.apache.org/licenses/LICENSE-2.0
#include "chaintwin/rng.hpp"

#include <cmath>
#include <numbers>

namespace chaintwin
{

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : seed_(seed),
      engine_(splitmix64(seed ^ DigestBuilder{}.str(label).value()))
{
}

double RngStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos()
{
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound)
{
    // Modulo bias is ~2^-64 * bound; irrelevant at simulation scales and the
    // reduction is identical on every platform.
    return engine_() % bound;
}

double RngStream::normal(double mean, double std)
{
    if (has_spare_)
    {
        has_spare_ = false;
        return mean + std * spare_;
    }
    double const u1 = uniform_pos();
    double const u2 = uniform();
    double const r = std::sqrt(-2.0 * std::log(u1));
    double const theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + std * (r * std::cos(theta));
}

double RngStream::exponential(double mean)
{
    return -mean * std::log(uniform_pos());
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
    return splitmix64(splitmix64(base ^ splitmix64(a)) ^ splitmix64(~b));
}

} // namespace chaintwin
