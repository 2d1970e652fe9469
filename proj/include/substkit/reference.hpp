#pragma once

// Serial reference versions of the parallel kernels, kept for testing.

#include <cstdint>
#include <vector>

namespace substkit::reference {

/// Linear sieve over smallest prime factors.
std::vector<std::int8_t> moebius(std::uint64_t N);
std::vector<std::int8_t> liouville(std::uint64_t N);

}  // namespace substkit::reference

#include "substkit/correlation.hpp"

namespace substkit::reference {

/// Index-by-index versions of the correlation kernels, one letter_at call
/// per letter, with a single running compensated sum.
CorrelationReport correlate(const FixedPointHandle& handle, const Observable& f, const ArithmeticFunction& fn,
                            std::uint64_t N, const std::vector<std::uint64_t>& checkpoints);

CorrelationReport kbsz_cross(const FixedPointHandle& handle, const Observable& f, std::uint64_t p, std::uint64_t q,
                             std::uint64_t N, const std::vector<std::uint64_t>& checkpoints);

double momo_short_intervals(const FixedPointHandle& handle, const std::optional<Observable>& f,
                            const ArithmeticFunction& fn, const MomoBlocks& blocks, std::uint64_t N);

}  // namespace substkit::reference
