#pragma once

// Bounded multiplicative functions and periodic tables.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "substkit/substitution.hpp"

namespace substkit {

using Complex = std::complex<double>;

/// mu(n) for 0 <= n <= N (entry 0 is 0), segmented sieve in blocks of 10^6.
/// Throws Overflow when N exceeds the table limit.
std::vector<std::int8_t> moebius_sieve(std::uint64_t N, int workers = 1, const Limits& limits = {});

/// Liouville lambda(n) = (-1)^Omega(n), same layout as moebius_sieve.
std::vector<std::int8_t> liouville_sieve(std::uint64_t N, int workers = 1, const Limits& limits = {});

enum class ArithKind { Moebius, Liouville, Dirichlet, AlternatingUnit, Table };

class ArithmeticFunction {
 public:
  static ArithmeticFunction moebius(std::uint64_t N, int workers = 1, const Limits& limits = {});
  static ArithmeticFunction liouville(std::uint64_t N, int workers = 1, const Limits& limits = {});
  /// Character number `index` modulo q <= 100 (index 0 is principal). Throws BadModulus.
  static ArithmeticFunction dirichlet(std::uint64_t q, std::uint64_t index);
  /// n -> (-1)^(n+1).
  static ArithmeticFunction alternating_unit();
  /// u(n) = values[n mod values.size()].
  static ArithmeticFunction periodic_table(std::vector<Complex> values, std::string label);

  /// "moebius", "liouville", "dirichlet:q:i", "alt1", "const1", "zero".
  static ArithmeticFunction parse(std::string_view spec, std::uint64_t N, int workers = 1, const Limits& limits = {});

  ArithKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }
  /// Largest n with a value; unbounded for periodic kinds.
  std::uint64_t n_max() const noexcept { return n_max_; }
  bool periodic() const noexcept { return !period_.empty(); }
  std::uint64_t period() const noexcept { return period_.size(); }
  double sup() const noexcept { return sup_; }

  Complex operator()(std::uint64_t n) const {
    return period_.empty() ? Complex(dense_[n], 0.0) : period_[n % period_.size()];
  }

 private:
  ArithKind kind_ = ArithKind::Table;
  std::string label_;
  std::uint64_t n_max_ = 0;
  std::vector<std::int8_t> dense_;
  std::vector<Complex> period_;
  double sup_ = 0.0;
};

/// Number of Dirichlet characters modulo q, i.e. Euler phi(q).
std::uint64_t character_count(std::uint64_t q);

struct ProgressionMean {
  std::uint64_t a = 0, b = 0;
  std::uint64_t terms = 0;
  Complex mean;
};

/// Means of u(a n + b) over 1 <= a n + b <= N, for 1 <= a <= a_max, b < a.
std::vector<ProgressionMean> progression_means(const ArithmeticFunction& fn, std::uint64_t a_max, std::uint64_t N);

}  // namespace substkit
