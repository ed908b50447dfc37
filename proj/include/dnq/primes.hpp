#pragma once

#include <cstdint>

#include "dnq/bigint.hpp"

namespace dnq {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Exact below 2^64. Above that, 64 Miller-Rabin rounds with a fixed-seed
/// base generator (error probability below 2^-128, reproducible verdicts).
bool is_prime(const Int& n);

}  // namespace dnq
