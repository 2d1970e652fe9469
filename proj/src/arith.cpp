#include "substkit/arith.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "substkit/error.hpp"

namespace substkit {

namespace {

constexpr std::uint64_t kSegment = 1'000'000;

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

enum class SieveMode { Moebius, Liouville };

std::vector<std::int8_t> segmented_sieve(std::uint64_t N, SieveMode mode, int workers, const Limits& limits) {
  if (N > limits.table_limit)
    fail(ErrorCode::Overflow, "sieve length " + std::to_string(N) + " exceeds the memory limit " +
                                  std::to_string(limits.table_limit));
  if (workers < 1) fail(ErrorCode::BadLength, "worker count must be positive");
  std::vector<std::int8_t> out(N + 1, 0);
  if (N == 0) return out;
  const auto primes = primes_up_to(isqrt(N));
  const auto segments = static_cast<std::int64_t>(N / kSegment + 1);

#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t s = 0; s < segments; ++s) {
    const std::uint64_t lo = static_cast<std::uint64_t>(s) * kSegment;
    const std::uint64_t hi = std::min(lo + kSegment, N + 1);
    std::vector<std::uint64_t> rem(hi - lo);
    std::int8_t* value = out.data() + lo;
    for (std::uint64_t i = 0; i < hi - lo; ++i) {
      rem[i] = lo + i;
      value[i] = 1;
    }
    for (std::uint64_t p : primes) {
      if (p * p > hi - 1) break;
      std::uint64_t m = std::max(p, (lo + p - 1) / p * p);
      for (; m < hi; m += p) {
        const std::uint64_t i = m - lo;
        if (mode == SieveMode::Moebius) {
          if (value[i] == 0) continue;
          rem[i] /= p;
          value[i] = rem[i] % p == 0 ? std::int8_t{0} : static_cast<std::int8_t>(-value[i]);
        } else {
          while (rem[i] % p == 0) {
            rem[i] /= p;
            value[i] = static_cast<std::int8_t>(-value[i]);
          }
        }
      }
    }
    // what is left is 1 or a single prime above the square root
    for (std::uint64_t i = 0; i < hi - lo; ++i)
      if (rem[i] > 1) value[i] = static_cast<std::int8_t>(-value[i]);
    if (lo == 0) value[0] = 0;
  }
  return out;
}

struct CyclicComponent {
  std::uint64_t modulus;  // prime power
  std::uint64_t order;
  std::vector<std::int64_t> log;  // residue -> exponent, -1 for non-units
};

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (b %= m; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

CyclicComponent cyclic(std::uint64_t modulus, std::uint64_t generator, std::uint64_t order) {
  CyclicComponent c{modulus, order, std::vector<std::int64_t>(modulus, -1)};
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k, x = x * generator % modulus) c.log[x] = static_cast<std::int64_t>(k);
  return c;
}

// Components of (Z/qZ)^*, each with a discrete log table. For 2^e with e >= 3
// the group is <-1> x <5>; the log of -1 is stored as a separate component.
std::vector<CyclicComponent> unit_group(std::uint64_t q) {
  std::vector<CyclicComponent> out;
  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    std::uint64_t pe = 1, e = 0;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
      ++e;
    }
    if (p == 2) {
      if (e == 2) out.push_back(cyclic(4, 3, 2));
      if (e >= 3) {
        CyclicComponent sign{pe, 2, std::vector<std::int64_t>(pe, -1)};
        CyclicComponent five = cyclic(pe, 5, pe / 4);
        CyclicComponent five_full{pe, pe / 4, std::vector<std::int64_t>(pe, -1)};
        for (std::uint64_t x = 1; x < pe; x += 2) {
          const bool neg = x % 4 == 3;
          sign.log[x] = neg ? 1 : 0;
          five_full.log[x] = five.log[neg ? pe - x : x];
        }
        out.push_back(std::move(sign));
        out.push_back(std::move(five_full));
      }
      continue;
    }
    const std::uint64_t phi = pe / p * (p - 1);
    std::vector<std::uint64_t> factors;
    for (std::uint64_t r = 2, x = phi; x > 1; ++r)
      if (x % r == 0) {
        factors.push_back(r);
        while (x % r == 0) x /= r;
      }
    for (std::uint64_t g = 2; g < pe; ++g) {
      if (g % p == 0) continue;
      if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) { return power_mod(g, phi / r, pe) != 1; })) {
        out.push_back(cyclic(pe, g, phi));
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::int8_t> moebius_sieve(std::uint64_t N, int workers, const Limits& limits) {
  return segmented_sieve(N, SieveMode::Moebius, workers, limits);
}

std::vector<std::int8_t> liouville_sieve(std::uint64_t N, int workers, const Limits& limits) {
  return segmented_sieve(N, SieveMode::Liouville, workers, limits);
}

std::uint64_t character_count(std::uint64_t q) {
  std::uint64_t phi = q, rest = q;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      phi -= phi / p;
    }
  if (rest > 1) phi -= phi / rest;
  return phi;
}

ArithmeticFunction ArithmeticFunction::moebius(std::uint64_t N, int workers, const Limits& limits) {
  ArithmeticFunction f;
  f.kind_ = ArithKind::Moebius;
  f.label_ = "moebius";
  f.dense_ = moebius_sieve(N, workers, limits);
  f.n_max_ = N;
  f.sup_ = 1.0;
  return f;
}

ArithmeticFunction ArithmeticFunction::liouville(std::uint64_t N, int workers, const Limits& limits) {
  ArithmeticFunction f;
  f.kind_ = ArithKind::Liouville;
  f.label_ = "liouville";
  f.dense_ = liouville_sieve(N, workers, limits);
  f.n_max_ = N;
  f.sup_ = 1.0;
  return f;
}

ArithmeticFunction ArithmeticFunction::dirichlet(std::uint64_t q, std::uint64_t index) {
  if (q < 1 || q > 100) fail(ErrorCode::BadModulus, "character modulus must be in [1, 100], got " + std::to_string(q));
  if (index >= character_count(q))
    fail(ErrorCode::BadModulus, "character index " + std::to_string(index) + " out of range for modulus " + std::to_string(q));
  const auto components = unit_group(q);
  std::uint64_t common = 1;
  for (const auto& c : components) common = std::lcm(common, c.order);
  std::vector<std::uint64_t> k;
  std::uint64_t rest = index;
  for (const auto& c : components) {
    k.push_back(rest % c.order);
    rest /= c.order;
  }
  std::vector<Complex> values(q, Complex(0.0, 0.0));
  for (std::uint64_t n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& c = components[i];
      num = (num + k[i] * static_cast<std::uint64_t>(c.log[n % c.modulus]) * (common / c.order)) % common;
    }
    if (4 * num % common == 0) {
      static const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      values[n] = quarter[4 * num / common];
    } else {
      values[n] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(common));
    }
  }
  auto f = periodic_table(std::move(values), "dirichlet:" + std::to_string(q) + ":" + std::to_string(index));
  f.kind_ = ArithKind::Dirichlet;
  return f;
}

ArithmeticFunction ArithmeticFunction::alternating_unit() {
  auto f = periodic_table({Complex(-1, 0), Complex(1, 0)}, "alt1");
  f.kind_ = ArithKind::AlternatingUnit;
  return f;
}

ArithmeticFunction ArithmeticFunction::periodic_table(std::vector<Complex> values, std::string label) {
  if (values.empty()) fail(ErrorCode::BadLength, "empty periodic table");
  ArithmeticFunction f;
  f.kind_ = ArithKind::Table;
  f.label_ = std::move(label);
  f.n_max_ = std::numeric_limits<std::uint64_t>::max();
  f.sup_ = 0.0;
  for (const auto& v : values) f.sup_ = std::max(f.sup_, std::abs(v));
  if (f.sup_ > 1.0 + 1e-12) fail(ErrorCode::BadLength, "table values must be bounded by 1 in modulus");
  f.period_ = std::move(values);
  return f;
}

ArithmeticFunction ArithmeticFunction::parse(std::string_view spec, std::uint64_t N, int workers, const Limits& limits) {
  if (spec == "moebius" || spec == "mu") return moebius(N, workers, limits);
  if (spec == "liouville") return liouville(N, workers, limits);
  if (spec == "alt1") return alternating_unit();
  if (spec == "const1") return periodic_table({Complex(1, 0)}, "const1");
  if (spec == "zero") return periodic_table({Complex(0, 0)}, "zero");
  if (spec.starts_with("dirichlet:")) {
    auto rest = spec.substr(10);
    const auto colon = rest.find(':');
    std::uint64_t q = 0, index = 0;
    if (colon != std::string_view::npos) {
      auto q_text = rest.substr(0, colon), i_text = rest.substr(colon + 1);
      auto r1 = std::from_chars(q_text.data(), q_text.data() + q_text.size(), q);
      auto r2 = std::from_chars(i_text.data(), i_text.data() + i_text.size(), index);
      if (r1.ec == std::errc{} && r1.ptr == q_text.data() + q_text.size() && r2.ec == std::errc{} &&
          r2.ptr == i_text.data() + i_text.size())
        return dirichlet(q, index);
    }
  }
  fail(ErrorCode::ParseError, "unknown arithmetic function '" + std::string(spec) + "'");
}

std::vector<ProgressionMean> progression_means(const ArithmeticFunction& fn, std::uint64_t a_max, std::uint64_t N) {
  if (N > fn.n_max()) fail(ErrorCode::Overflow, "N exceeds the range of " + fn.label());
  std::vector<ProgressionMean> out;
  for (std::uint64_t a = 1; a <= a_max; ++a)
    for (std::uint64_t b = 0; b < a; ++b) {
      ProgressionMean row{a, b, 0, Complex(0, 0)};
      Complex sum(0, 0);
      for (std::uint64_t n = b == 0 ? a : b; n <= N; n += a) {
        sum += fn(n);
        ++row.terms;
      }
      if (row.terms) row.mean = sum / static_cast<double>(row.terms);
      out.push_back(row);
    }
  return out;
}

}  // namespace substkit
