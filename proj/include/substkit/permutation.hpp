#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace substkit {

/// A bijection of {0, ..., n-1} given by its image table.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image);  // throws InternalInvariantViolation if not bijective

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;
  int sign() const;

  /// Cycle notation, each cycle opened at its smallest element: "(021)",
  /// "(01)(23)", "id".
  std::string cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation power(const Permutation& p, std::uint64_t k);

/// Parses cycle notation as produced by cycles(); "id" is accepted.
Permutation parse_cycles(const std::string& text, std::size_t n);

std::uint64_t saturating_factorial(std::uint64_t n);

}  // namespace substkit
