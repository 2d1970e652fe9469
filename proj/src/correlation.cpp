#include "substkit/correlation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include "substkit/error.hpp"
#include "substkit/summation.hpp"

namespace substkit {

namespace {

struct Range {
  std::uint64_t lo, hi;  // inclusive
};

std::vector<Range> block_grid(const std::vector<std::uint64_t>& checkpoints) {
  std::vector<Range> out;
  std::uint64_t cur = 1;
  for (std::uint64_t c : checkpoints)
    while (cur <= c) {
      const std::uint64_t hi = std::min(cur + kCorrelationBlock - 1, c);
      out.push_back({cur, hi});
      cur = hi + 1;
    }
  return out;
}

void check_checkpoints(const std::vector<std::uint64_t>& checkpoints, std::uint64_t N) {
  if (checkpoints.empty() || checkpoints.back() != N)
    fail(ErrorCode::BadLength, "checkpoints must end at N");
  for (std::size_t i = 0; i < checkpoints.size(); ++i)
    if (checkpoints[i] == 0 || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
      fail(ErrorCode::BadLength, "checkpoints must be positive and increasing");
}

void check_workers(int workers) {
  if (workers < 1) fail(ErrorCode::BadLength, "worker count must be positive");
}

CorrelationReport reduce(const std::vector<Range>& grid, const std::vector<Complex>& sums,
                         const std::vector<std::uint64_t>& checkpoints) {
  CorrelationReport report;
  report.checkpoints = checkpoints;
  ComplexSum total;
  std::size_t next = 0;
  for (std::size_t b = 0; b < grid.size(); ++b) {
    total.add(sums[b]);
    if (grid[b].hi == checkpoints[next]) {
      report.partial_means.push_back(total.value() / static_cast<double>(checkpoints[next]));
      ++next;
    }
  }
  return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !(v >= 1.0) || v > 1e18 || std::floor(v) != v)
    fail(ErrorCode::ParseError, "expected a positive integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_checkpoints(std::string_view spec, std::uint64_t N) {
  std::vector<std::uint64_t> out;
  if (spec == "log10") {
    for (std::uint64_t v = 10; v < N; v *= 10) out.push_back(v);
  } else {
    std::size_t start = 0;
    while (start <= spec.size()) {
      auto pos = spec.find(',', start);
      if (pos == std::string_view::npos) pos = spec.size();
      const std::uint64_t v = parse_count(spec.substr(start, pos - start));
      if (v > N) fail(ErrorCode::ParseError, "checkpoint beyond N");
      if (!out.empty() && v <= out.back()) fail(ErrorCode::ParseError, "checkpoints must increase");
      out.push_back(v);
      start = pos + 1;
    }
  }
  if (out.empty() || out.back() != N) out.push_back(N);
  return out;
}

CorrelationReport correlate(const FixedPointHandle& handle, const Observable& f, const ArithmeticFunction& fn,
                            std::uint64_t N, const std::vector<std::uint64_t>& checkpoints, int workers) {
  const auto start = std::chrono::steady_clock::now();
  check_workers(workers);
  check_checkpoints(checkpoints, N);
  if (N > fn.n_max()) fail(ErrorCode::Overflow, "N exceeds the sieved range of " + fn.label());
  const BlockExpander expander(handle);
  const auto grid = block_grid(checkpoints);
  std::vector<Complex> sums(grid.size());
  const std::size_t span = f.span();

#pragma omp parallel num_threads(workers)
  {
    std::vector<Letter> letters(kCorrelationBlock + span);
#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(grid.size()); ++b) {
      const auto [lo, hi] = grid[b];
      const std::size_t count = hi - lo + 1;
      expander.fill(lo, std::span<Letter>(letters.data(), count + span - 1));
      ComplexSum sum;
      for (std::size_t i = 0; i < count; ++i) sum.add(f(letters.data() + i) * fn(lo + i));
      sums[b] = sum.value();
    }
  }
  auto report = reduce(grid, sums, checkpoints);
  report.bound = f.sup() * fn.sup();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CorrelationReport kbsz_cross(const FixedPointHandle& handle, const Observable& f, std::uint64_t p, std::uint64_t q,
                             std::uint64_t N, const std::vector<std::uint64_t>& checkpoints, int workers) {
  const auto start = std::chrono::steady_clock::now();
  check_workers(workers);
  check_checkpoints(checkpoints, N);
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (!is_prime(q)) fail(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  if (p == q) fail(ErrorCode::EqualPrimes, "p and q must differ");
  const BlockExpander expander(handle);
  const auto grid = block_grid(checkpoints);
  std::vector<Complex> sums(grid.size());
  const std::size_t span = f.span();

#pragma omp parallel num_threads(workers)
  {
    std::vector<Letter> wp(span), wq(span);
#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(grid.size()); ++b) {
      ComplexSum sum;
      for (std::uint64_t n = grid[b].lo; n <= grid[b].hi; ++n) {
        expander.fill(p * n, wp);
        expander.fill(q * n, wq);
        sum.add(f(wp.data()) * std::conj(f(wq.data())));
      }
      sums[b] = sum.value();
    }
  }
  auto report = reduce(grid, sums, checkpoints);
  report.bound = f.sup() * f.sup();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::uint64_t MomoBlocks::boundary(std::uint64_t k) const {
  auto v = checked_power(k, power, std::uint64_t{1} << 62);
  if (!v) fail(ErrorCode::Overflow, "block boundary overflows");
  return *v;
}

MomoBlocks parse_blocks(std::string_view spec) {
  if (spec.size() >= 2 && spec[0] == 'k' && std::all_of(spec.begin() + 1, spec.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const unsigned power = static_cast<unsigned>(std::stoul(std::string(spec.substr(1))));
    if (power >= 2 && power <= 8) return {power};
  }
  fail(ErrorCode::BadBlocks, "blocks must be kP with 2 <= P <= 8 (b_k = k^P), got '" + std::string(spec) + "'");
}

std::uint64_t momo_phase(std::uint64_t k) { return splitmix64(k) & ((std::uint64_t{1} << 40) - 1); }

MomoReport momo_short_intervals(const FixedPointHandle& handle, const std::optional<Observable>& f,
                                const ArithmeticFunction& fn, const MomoBlocks& blocks, std::uint64_t N, int workers) {
  const auto start = std::chrono::steady_clock::now();
  check_workers(workers);
  if (blocks.power < 2) fail(ErrorCode::BadBlocks, "block gaps must grow");
  std::uint64_t K = 1;
  while (blocks.boundary(K + 1) <= N) ++K;
  if (K < 2) fail(ErrorCode::BadBlocks, "N too small for two block boundaries");
  const std::uint64_t last = blocks.boundary(K);
  if (last - 1 > fn.n_max()) fail(ErrorCode::Overflow, "blocks exceed the sieved range of " + fn.label());

  const BlockExpander expander(handle);
  std::vector<double> sizes(K - 1);
  const std::size_t span = f ? f->span() : 1;

#pragma omp parallel num_threads(workers)
  {
    std::vector<Letter> letters;
#pragma omp for schedule(dynamic)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(K - 1); ++idx) {
      const std::uint64_t k = static_cast<std::uint64_t>(idx) + 1;
      const std::uint64_t lo = blocks.boundary(k), hi = blocks.boundary(k + 1);
      ComplexSum sum;
      if (!f) {
        for (std::uint64_t n = lo; n < hi; ++n) sum.add(fn(n));
      } else {
        const std::uint64_t shift = momo_phase(k);
        letters.resize(hi - lo + span - 1);
        expander.fill(shift + lo, letters);
        for (std::uint64_t n = lo; n < hi; ++n) sum.add((*f)(letters.data() + (n - lo)) * fn(n));
      }
      sizes[idx] = std::abs(sum.value());
    }
  }
  CompensatedSum total;
  for (double s : sizes) total.add(s);
  MomoReport report;
  report.value = total.value() / static_cast<double>(last - blocks.boundary(1));
  report.blocks = K;
  report.last_boundary = last;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace substkit
