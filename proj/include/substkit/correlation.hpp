#pragma once

// Checkpointed correlation means along the fixed point.
//
// The index range is cut into a fixed grid of blocks (independent of the
// number of workers, and cut at every checkpoint); each block is summed with
// compensation and the block sums are reduced serially in index order, so the
// result is bit-identical for any worker count.

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "substkit/arith.hpp"
#include "substkit/observable.hpp"
#include "substkit/substitution.hpp"

namespace substkit {

inline constexpr std::uint64_t kCorrelationBlock = std::uint64_t{1} << 16;

struct CorrelationReport {
  std::vector<std::uint64_t> checkpoints;
  std::vector<Complex> partial_means;
  double bound = 0.0;  // sup |a| sup |u|
  double elapsed_seconds = 0.0;
};

/// "log10" gives 10, 100, ... up to N, plus N itself; otherwise a comma list
/// such as "1e4,1e5,1e6". Always increasing, last entry N.
std::vector<std::uint64_t> parse_checkpoints(std::string_view spec, std::uint64_t N);

/// Accepts "10000000", "1e7", "2.5e6".
std::uint64_t parse_count(std::string_view text);

/// (1/N) sum_{n=1}^{N} a_n u(n); throws Overflow if N is beyond fn's table.
CorrelationReport correlate(const FixedPointHandle& handle, const Observable& f, const ArithmeticFunction& fn,
                            std::uint64_t N, const std::vector<std::uint64_t>& checkpoints, int workers = 1);

/// (1/N) sum_{n=1}^{N} a_{pn} conj(a_{qn}); throws NotPrime, EqualPrimes.
CorrelationReport kbsz_cross(const FixedPointHandle& handle, const Observable& f, std::uint64_t p, std::uint64_t q,
                             std::uint64_t N, const std::vector<std::uint64_t>& checkpoints, int workers = 1);

bool is_prime(std::uint64_t n);

/// Block boundaries b_k = k^power.
struct MomoBlocks {
  unsigned power = 2;
  std::uint64_t boundary(std::uint64_t k) const;
};

/// "k2", "k3", ...; throws BadBlocks unless the gaps grow.
MomoBlocks parse_blocks(std::string_view spec);

struct MomoReport {
  double value = 0.0;
  std::uint64_t blocks = 0;  // K
  std::uint64_t last_boundary = 0;  // b_K
  double elapsed_seconds = 0.0;
};

/// Phase of block k: y_k is the fixed point shifted by splitmix64(k) mod 2^40.
std::uint64_t momo_phase(std::uint64_t k);

/// (1/(b_K - b_1)) sum_{k<K} |sum_{b_k <= n < b_{k+1}} f(S^n y_k) u(n)| with
/// the largest K such that b_K <= N. Without an observable f is constant 1.
MomoReport momo_short_intervals(const FixedPointHandle& handle, const std::optional<Observable>& f,
                                const ArithmeticFunction& fn, const MomoBlocks& blocks, std::uint64_t N,
                                int workers = 1);

}  // namespace substkit
