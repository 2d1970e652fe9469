#pragma once

// Constant-length substitutions: representation, iteration and fixed points.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace substkit {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Size limits shared by every operation that allocates letter tables.
struct Limits {
  std::uint64_t word_limit = 10'000'000;    // letters per rule of a power
  std::uint64_t table_limit = 100'000'000;  // prefix letters, sieve entries
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find(std::string_view name) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) { return x.names_ == y.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
};

/// Unvalidated description, as read from a definition file.
struct SubstitutionDef {
  std::vector<std::string> alphabet;
  std::int64_t lambda = 0;
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
};

/// Throws EmptyAlphabet, DuplicateSymbol, BadLength, UnknownSymbol or
/// RuleLengthMismatch; returns normally iff the definition is well formed.
void validate(const SubstitutionDef& def);

class Substitution {
 public:
  /// `flat_rules` holds the rules back to back, `length` letters each.
  Substitution(Alphabet alphabet, std::size_t length, std::vector<Letter> flat_rules);

  static Substitution from_def(const SubstitutionDef& def);

  /// Single-character letters, e.g. from_chars("abc", {"ab", "ca", "ba"}).
  static Substitution from_chars(std::string_view letters, const std::vector<std::string>& rules);

  std::size_t size() const noexcept { return alphabet_.size(); }
  std::size_t length() const noexcept { return length_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& flat() const noexcept { return rules_; }

  std::span<const Letter> rule(Letter a) const {
    return {rules_.data() + static_cast<std::size_t>(a) * length_, length_};
  }
  Letter image(Letter a, std::size_t j) const { return rules_[static_cast<std::size_t>(a) * length_ + j]; }

  /// Applies the substitution to a word by concatenation.
  Word apply(std::span<const Letter> word) const;

  /// "a -> ab" style rule rendering, one string per letter.
  std::vector<std::string> rule_strings(std::string_view separator = "") const;

  SubstitutionDef to_def() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Alphabet alphabet_;
  std::size_t length_ = 0;
  std::vector<Letter> rules_;
};

/// Returns length^k, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t k, std::uint64_t cap);

/// k-th iterate; throws Overflow when length^k exceeds the word limit.
Substitution power(const Substitution& sub, std::uint64_t k, const Limits& limits = {});

class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  /// Number of occurrences of `a` in the image of `from`.
  std::uint64_t entry(Letter a, Letter from) const { return entries_[a * n_ + from]; }
  std::uint64_t& entry(Letter a, Letter from) { return entries_[a * n_ + from]; }
  std::uint64_t column_sum(Letter from) const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

IncidenceMatrix incidence(const Substitution& sub);

struct PrimitivityResult {
  bool primitive = false;
  std::uint64_t witness = 0;  // smallest k with every image of the k-th power full
};

PrimitivityResult is_primitive(const Substitution& sub);

/// Letter frequencies: the normalized Perron eigenvector of the incidence
/// matrix. Throws NotPrimitive.
std::vector<double> densities(const Substitution& sub);

/// A power of a substitution with a letter whose image starts with itself;
/// the one-sided fixed point grown from that letter.
class FixedPointHandle {
 public:
  FixedPointHandle(Substitution base, Letter seed, std::uint64_t power_taken = 1);

  const Substitution& base() const noexcept { return base_; }
  Letter seed() const noexcept { return seed_; }
  std::uint64_t power_taken() const noexcept { return power_taken_; }

  /// u[n], reading n in base `length` from the most significant digit.
  Letter letter_at(std::uint64_t n) const;

 private:
  Substitution base_;
  Letter seed_;
  std::uint64_t power_taken_;
};

/// Smallest l <= |A| and smallest letter with sub^l(a)_0 = a.
FixedPointHandle find_fixed_seed(const Substitution& sub, const Limits& limits = {});

inline Letter letter_at(const FixedPointHandle& handle, std::uint64_t n) { return handle.letter_at(n); }

/// First `length` letters of the fixed point by repeated rule application.
Word prefix(const FixedPointHandle& handle, std::uint64_t length, const Limits& limits = {});

/// Fast sequential access to fixed-point letters: blocks of `block_length`
/// letters are copied from a precomputed power, so only one random access
/// per block is needed. Immutable; safe to share between threads.
class BlockExpander {
 public:
  explicit BlockExpander(const FixedPointHandle& handle, std::uint64_t max_block = 4096);

  const FixedPointHandle& handle() const noexcept { return handle_; }
  std::uint64_t block_length() const noexcept { return block_; }

  /// Writes u[first], ..., u[first + out.size() - 1].
  void fill(std::uint64_t first, std::span<Letter> out) const;

 private:
  FixedPointHandle handle_;
  std::uint64_t block_ = 1;
  std::uint64_t depth_ = 0;
  Substitution table_;
};

struct Quotient {
  Substitution sub;
  std::vector<Letter> map;          // letter of the input -> letter of the quotient
  std::vector<std::size_t> sizes;   // alphabet size after each identification round
};

/// Identifies letters with equal images, repeatedly, until the rules are
/// pairwise distinct.
Quotient quotient_by_equal_rules(const Substitution& sub);

}  // namespace substkit
