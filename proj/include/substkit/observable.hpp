#pragma once

// Observables a_n = F(u[n], ..., u[n + 2r]) on the one-sided fixed point.

#include <complex>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "substkit/substitution.hpp"

namespace substkit {

using Complex = std::complex<double>;

class Observable {
 public:
  /// Unlisted letters take the value 0.
  static Observable one_code(const Alphabet& alphabet, const std::map<Letter, Complex>& values);
  /// Values on (2r+1)-letter windows; unlisted windows take the value 0.
  static Observable window(const Alphabet& alphabet, std::size_t radius, const std::map<Word, Complex>& table);
  static Observable constant(const Alphabet& alphabet, Complex value);

  /// "code1:a=1,b=-1,c=0.5i", "window:r=1:<file>" or "const1". The window file
  /// is a JSON object from space-separated windows to numbers or [re, im].
  /// Throws BadObservable.
  static Observable parse(std::string_view spec, const Alphabet& alphabet);

  std::size_t radius() const noexcept { return radius_; }
  std::size_t span() const noexcept { return 2 * radius_ + 1; }
  const std::string& description() const noexcept { return description_; }

  /// Value on the window starting at `w` (span() letters), minus the mean.
  Complex operator()(const Letter* w) const {
    if (radius_ == 0) return table_[*w];
    std::size_t index = 0;
    for (std::size_t i = 0; i < span(); ++i) index = index * letters_ + w[i];
    return table_[index];
  }

  Complex mean() const noexcept { return mean_; }
  const std::string& mean_source() const noexcept { return mean_source_; }
  /// Largest modulus of a value, after the mean is subtracted.
  double sup() const noexcept { return sup_; }

  /// Subtracts the mean along the fixed point: letter densities for a
  /// primitive 1-code, otherwise the average over `prefix_length` letters.
  Observable centered(const FixedPointHandle& handle, std::uint64_t prefix_length = 10'000'000) const;

  /// Mean over the first `length` positions, serial and deterministic.
  Complex empirical_mean(const FixedPointHandle& handle, std::uint64_t length) const;

 private:
  std::size_t radius_ = 0;
  std::size_t letters_ = 0;
  std::vector<Complex> table_;  // values with the mean already subtracted
  Complex mean_{0.0, 0.0};
  std::string mean_source_ = "none";
  std::string description_;
  double sup_ = 0.0;

  void refresh_sup();
};

/// Parses "1", "-0.5", "2i", "-i", "1+2i".
Complex parse_complex(std::string_view text);

}  // namespace substkit
