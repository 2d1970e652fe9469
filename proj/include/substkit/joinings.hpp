#pragma once

// Joinings of substitutions and the tower built over the synchronizing part:
// theta v theta~, its ordered renaming, the group extension and eta.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "substkit/permutation.hpp"
#include "substkit/structure.hpp"
#include "substkit/substitution.hpp"

namespace substkit {

using LetterPair = std::pair<Letter, Letter>;

struct Join {
  Substitution sub;
  std::vector<LetterPair> pairs;  // letter i of sub is pairs[i], sorted
  bool surjective = false;        // both projections onto
  bool primitive = false;
};

/// Closure of `seeds` under (a, b) -> (theta(a)_j, zeta(b)_j).
/// Throws LengthMismatch, EmptySeeds, IndexOutOfRange.
Join join(const Substitution& theta, const Substitution& zeta, const std::vector<LetterPair>& seeds);

struct JoinBounds {
  std::size_t c_theta = 0, c_zeta = 0, c_joined = 0;
  std::uint64_t h_theta = 0, h_zeta = 0, h_joined = 0;
};

/// max(c1, c2) <= c <= c1 c2 and lcm(h1, h2) | h; throws BoundViolation.
JoinBounds join_bounds_check(const Substitution& theta, const Substitution& zeta, const Substitution& joined,
                             const Limits& limits = {});

/// theta v theta~ on {(a, M) : a in M}, raised to the power that gives it a
/// fixed seed. theta and tilde are raised to the same power.
struct SyncJoin {
  Substitution theta;   // theta^l
  Substitution tilde;   // synchronizing part of theta, to the power l
  Substitution joined;  // letter index: position of (a, M) in M-major order
  SyncFamily family;
  std::vector<LetterPair> pairs;  // (a, M index) per joined letter
  std::uint64_t power_taken = 1;
  Letter seed = 0;  // joined letter with joined(seed)_0 = seed
};

SyncJoin theta_sync_join(const Substitution& sub, const Limits& limits = {});

/// Theta~ over {0..c-1} x X. Letter (i, M) has index M c + i and stands for
/// the i-th letter of M in `order`.
struct OrderedJoin {
  SyncJoin base;
  std::size_t c = 0;
  std::size_t m0 = 0;  // index of the set carrying the seed
  Letter a0 = 0;
  std::uint64_t k0 = 0;
  Digits j0;  // k0 digits; the column of theta~^k0 at j0 is constantly M0
  std::vector<std::vector<Letter>> order;
  Substitution sub;

  std::size_t sets() const noexcept { return order.size(); }
  Letter letter(std::size_t i, std::size_t m) const { return static_cast<Letter>(m * c + i); }
};

OrderedJoin order_and_rename(const Substitution& sub, const Limits& limits = {});
OrderedJoin order_and_rename(SyncJoin base);

/// sigma_{M,j}: the inverse of n -> first coordinate of Theta~(n, M)_j.
Permutation column_permutation(const OrderedJoin& oj, std::size_t m, std::size_t j);

/// sigma^(k)_{M,j} by digit-wise composition; digits most significant first.
Permutation sigma_k(const OrderedJoin& oj, std::size_t m, const Digits& digits);
Permutation sigma_k(const OrderedJoin& oj, std::size_t m, std::uint64_t k, std::uint64_t j);

/// Base-length digits of j, exactly k of them.
Digits to_digits(std::uint64_t j, std::uint64_t base, std::uint64_t k);

/// Letter of sub^k(a) at the column given by `digits`.
Letter image_at(const Substitution& sub, Letter a, const Digits& digits);

struct GroupClosure {
  std::vector<Permutation> elements;  // identity first, then lexicographic
  std::vector<Permutation> generators;
  std::vector<std::vector<std::size_t>> table;  // table[x][y] = index of x ∘ y

  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t inverse(std::size_t x) const;
};

/// Throws GroupTooLarge if the closure exceeds c!.
GroupClosure group_closure(const OrderedJoin& oj);
GroupClosure group_closure(const std::vector<Permutation>& generators, std::size_t degree);

struct GroupExtension {
  OrderedJoin oj;
  GroupClosure group;
  std::uint64_t t = 1;    // power taken so that (g, M0) starts with itself
  Substitution tilde;     // theta~ to the power t
  Substitution sub;       // normalized extension; letter (g, M) has index g |X| + M
  std::vector<std::size_t> sigma_hat;  // group index of the sigma of sub, at M Lambda + j
  std::uint64_t h_hat = 1;
  std::vector<std::uint64_t> f;         // per group element, in Z/h_hat Z
  std::vector<std::size_t> kernel;      // group indices with f = 0
  std::vector<std::pair<std::uint64_t, Digits>> kaem;  // per M: (k_M, digits of j_M)

  std::size_t sets() const noexcept { return oj.sets(); }
  std::uint64_t length() const noexcept { return sub.length(); }
  Letter letter(std::size_t g, std::size_t m) const { return static_cast<Letter>(g * sets() + m); }
  std::size_t group_of(Letter x) const { return x / sets(); }
  std::size_t set_of(Letter x) const { return x % sets(); }
  const Permutation& sigma(std::size_t m, std::size_t j) const {
    return group.elements[sigma_hat[m * length() + j]];
  }
  FixedPointHandle fixed_point() const { return FixedPointHandle(sub, letter(0, oj.m0)); }
};

GroupExtension group_extension(OrderedJoin oj, const Limits& limits = {});

struct EtaTriple {
  std::size_t g = 0, m = 0, m_next = 0;
  friend auto operator<=>(const EtaTriple&, const EtaTriple&) = default;
};

struct Eta {
  Substitution sub;
  std::vector<EtaTriple> letters;  // letter 0 is the seed window
  std::optional<Letter> find(const EtaTriple& x) const;
};

Eta eta(const GroupExtension& ge);

struct EtaH {
  Substitution sub;
  Substitution periodic;  // p(i)_j = Lambda i + j mod h_hat
  std::vector<LetterPair> pairs;  // (eta letter, residue) per letter
  std::uint64_t h = 1;
};

EtaH eta_h(const GroupExtension& ge, const Eta& e, const Limits& limits = {});

/// Radius-1 code (g_n, M_n) -> (g_{n+1}^{-1} g_n, M_n, M_{n+1}) into the eta
/// alphabet; nullopt at windows outside it. Output is one letter shorter.
std::vector<std::optional<Letter>> sliding_code(const GroupExtension& ge, const Eta& e, std::span<const Letter> seq);

/// (g, M) -> (tau ∘ g, M); throws NotInGroup.
Word v_tau(const GroupExtension& ge, std::span<const Letter> seq, const Permutation& tau);

/// (i, M) -> i-th letter of M; throws IndexOutOfRange.
Word project_to_theta(const OrderedJoin& oj, std::span<const Letter> seq);

}  // namespace substkit
