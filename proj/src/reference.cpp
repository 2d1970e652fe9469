#include "substkit/reference.hpp"

namespace substkit::reference {

namespace {

std::vector<std::uint32_t> smallest_prime_factor(std::uint64_t N) {
  std::vector<std::uint32_t> spf(N + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= N; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > N) break;
      spf[i * p] = p;
    }
  }
  return spf;
}

}  // namespace

std::vector<std::int8_t> moebius(std::uint64_t N) {
  const auto spf = smallest_prime_factor(N);
  std::vector<std::int8_t> mu(N + 1, 0);
  if (N >= 1) mu[1] = 1;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = spf[n], m = n / p;
    mu[n] = m % p == 0 ? std::int8_t{0} : static_cast<std::int8_t>(-mu[m]);
  }
  return mu;
}

std::vector<std::int8_t> liouville(std::uint64_t N) {
  const auto spf = smallest_prime_factor(N);
  std::vector<std::int8_t> lambda(N + 1, 0);
  if (N >= 1) lambda[1] = 1;
  for (std::uint64_t n = 2; n <= N; ++n) lambda[n] = static_cast<std::int8_t>(-lambda[n / spf[n]]);
  return lambda;
}

}  // namespace substkit::reference

#include "substkit/error.hpp"
#include "substkit/summation.hpp"

namespace substkit::reference {

namespace {

Complex value_at(const FixedPointHandle& handle, const Observable& f, std::uint64_t n) {
  std::vector<Letter> w(f.span());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = handle.letter_at(n + i);
  return f(w.data());
}

}  // namespace

CorrelationReport correlate(const FixedPointHandle& handle, const Observable& f, const ArithmeticFunction& fn,
                            std::uint64_t N, const std::vector<std::uint64_t>& checkpoints) {
  if (N > fn.n_max()) fail(ErrorCode::Overflow, "N exceeds the sieved range");
  CorrelationReport report;
  report.checkpoints = checkpoints;
  ComplexSum sum;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    sum.add(value_at(handle, f, n) * fn(n));
    if (next < checkpoints.size() && n == checkpoints[next])
      report.partial_means.push_back(sum.value() / static_cast<double>(checkpoints[next++]));
  }
  report.bound = f.sup() * fn.sup();
  return report;
}

CorrelationReport kbsz_cross(const FixedPointHandle& handle, const Observable& f, std::uint64_t p, std::uint64_t q,
                             std::uint64_t N, const std::vector<std::uint64_t>& checkpoints) {
  CorrelationReport report;
  report.checkpoints = checkpoints;
  ComplexSum sum;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    sum.add(value_at(handle, f, p * n) * std::conj(value_at(handle, f, q * n)));
    if (next < checkpoints.size() && n == checkpoints[next])
      report.partial_means.push_back(sum.value() / static_cast<double>(checkpoints[next++]));
  }
  report.bound = f.sup() * f.sup();
  return report;
}

double momo_short_intervals(const FixedPointHandle& handle, const std::optional<Observable>& f,
                            const ArithmeticFunction& fn, const MomoBlocks& blocks, std::uint64_t N) {
  std::uint64_t K = 1;
  while (blocks.boundary(K + 1) <= N) ++K;
  CompensatedSum total;
  for (std::uint64_t k = 1; k < K; ++k) {
    ComplexSum sum;
    for (std::uint64_t n = blocks.boundary(k); n < blocks.boundary(k + 1); ++n)
      sum.add((f ? value_at(handle, *f, momo_phase(k) + n) : Complex(1.0, 0.0)) * fn(n));
    total.add(std::abs(sum.value()));
  }
  return total.value() / static_cast<double>(blocks.boundary(K) - blocks.boundary(1));
}

}  // namespace substkit::reference
