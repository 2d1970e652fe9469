#pragma once

// Column families, column number, synchronizing part, height, pure base.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "substkit/substitution.hpp"

namespace substkit {

using LetterSet = std::vector<Letter>;  // sorted, no repeats
using Family = std::vector<LetterSet>;  // sorted, no repeats
using Digits = std::vector<std::uint32_t>;  // most significant first

/// Column set of `sub` at column j: {sub(a)_j : a in set}.
LetterSet column_image(const Substitution& sub, const LetterSet& set, std::size_t j);

std::string set_name(const Alphabet& alphabet, const LetterSet& set);

/// families[k-1] is F_k. The first repetition is F_{preperiod} =
/// F_{preperiod + period}; families stops just before it.
struct ColumnFamilyTrace {
  std::vector<Family> families;
  std::vector<std::vector<Digits>> witnesses;  // smallest column index realizing each set
  std::size_t preperiod = 0;
  std::size_t period = 0;

  std::size_t min_cardinality(std::size_t k) const;  // over F_k, k >= 1
};

ColumnFamilyTrace column_trace(const Substitution& sub);

std::size_t column_number(const Substitution& sub);
std::size_t column_number(const ColumnFamilyTrace& trace);

struct SyncFamily {
  std::size_t c = 0;
  std::vector<LetterSet> sets;  // lexicographic by sorted letter list
  std::size_t witness_k = 0;    // common k: every set is a column of sub^k
  std::vector<Digits> witness;  // per set, k digits
  bool partition = false;
};

/// Throws NotPrimitive; closure and union are checked as theorems.
SyncFamily sync_family(const Substitution& sub);
SyncFamily sync_family(const Substitution& sub, const ColumnFamilyTrace& trace);

/// The induced substitution on the sync family; letter i is family.sets[i].
Substitution synchronizing_part(const Substitution& sub);
Substitution synchronizing_part(const Substitution& sub, const SyncFamily& family);

struct HeightResult {
  std::uint64_t h = 1;
  std::uint64_t observed_gcd = 0;
  std::vector<std::uint64_t> coloring;  // per letter, in Z/hZ
  bool certified = false;
  std::uint64_t prefix_length = 0;
};

/// Height of the substitution behind `handle`; the coloring satisfies
/// f(base(a)_j) = length(base) f(a) + j mod h. Throws CertificationFailed.
HeightResult height(const FixedPointHandle& handle, const Limits& limits = {});
HeightResult height(const Substitution& sub, const Limits& limits = {});

struct PureBase {
  Substitution sub;
  std::uint64_t h = 1;
  std::vector<Word> blocks;  // letter i of sub is blocks[i]
};

PureBase pure_base(const Substitution& sub, const Limits& limits = {});

struct Classification {
  bool bijective = false;
  bool quasi_bijective = false;
  bool synchronizing_case = false;
  std::size_t c = 0;
  std::uint64_t h = 0;
  std::size_t c_pure_base = 0;
};

Classification classify(const Substitution& sub, const Limits& limits = {});

struct ChIdentity {
  std::size_t c = 0;
  std::uint64_t h = 0;
  std::size_t c_pure_base = 0;
};

/// Throws IdentityViolation unless c = h * c(pure base).
ChIdentity check_ch_identity(const Substitution& sub, const Limits& limits = {});

struct WrapProfile {
  std::vector<std::uint64_t> singletons;  // l_k for k = 1..k_max
  std::vector<double> ratios;
  bool warning = false;  // column number above 1, ratios stay below 1
};

/// Throws Overflow when length^k_max does not fit in 64 bits.
WrapProfile wrap_profile(const Substitution& sub, std::size_t k_max);

/// First `length` letters of the fixed point with period `period`: the
/// prefix of that length repeated.
Word periodic_approximant(const FixedPointHandle& handle, std::uint64_t period, std::uint64_t length,
                          const Limits& limits = {});

/// Largest mismatch density over all windows of the given length.
double dW_estimate(std::span<const Letter> a, std::span<const Letter> b, std::size_t window);

}  // namespace substkit
