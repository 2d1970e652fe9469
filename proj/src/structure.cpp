#include "substkit/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "substkit/error.hpp"

namespace substkit {

LetterSet column_image(const Substitution& sub, const LetterSet& set, std::size_t j) {
  LetterSet out;
  out.reserve(set.size());
  for (Letter a : set) out.push_back(sub.image(a, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_name(const Alphabet& alphabet, const LetterSet& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + alphabet.name(set[i]);
  return s + "}";
}

std::size_t ColumnFamilyTrace::min_cardinality(std::size_t k) const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : families.at(k - 1)) best = std::min(best, s.size());
  return best;
}

ColumnFamilyTrace column_trace(const Substitution& sub) {
  constexpr std::size_t max_families = 1'000'000;
  ColumnFamilyTrace trace;
  LetterSet all(sub.size());
  std::iota(all.begin(), all.end(), Letter{0});

  std::map<LetterSet, Digits> next;
  for (std::uint32_t j = 0; j < sub.length(); ++j) next.try_emplace(column_image(sub, all, j), Digits{j});

  std::map<Family, std::size_t> seen;
  while (true) {
    Family family;
    std::vector<Digits> witness;
    for (auto& [set, digits] : next) {
      family.push_back(set);
      witness.push_back(std::move(digits));
    }
    const std::size_t k = trace.families.size() + 1;
    if (auto it = seen.find(family); it != seen.end()) {
      trace.preperiod = it->second;
      trace.period = k - it->second;
      return trace;
    }
    if (k > max_families) fail(ErrorCode::Overflow, "column family trace does not close");
    seen.emplace(family, k);

    next.clear();
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::uint32_t j = 0; j < sub.length(); ++j) {
        Digits candidate = witness[i];
        candidate.push_back(j);
        auto [it, inserted] = next.try_emplace(column_image(sub, family[i], j), candidate);
        if (!inserted && candidate < it->second) it->second = std::move(candidate);
      }
    trace.families.push_back(std::move(family));
    trace.witnesses.push_back(std::move(witness));
  }
}

std::size_t column_number(const ColumnFamilyTrace& trace) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 1; k <= trace.families.size(); ++k) best = std::min(best, trace.min_cardinality(k));
  return best;
}

std::size_t column_number(const Substitution& sub) { return column_number(column_trace(sub)); }

SyncFamily sync_family(const Substitution& sub) { return sync_family(sub, column_trace(sub)); }

SyncFamily sync_family(const Substitution& sub, const ColumnFamilyTrace& trace) {
  if (!is_primitive(sub).primitive) fail(ErrorCode::NotPrimitive, "sync family needs a primitive substitution");
  SyncFamily out;
  out.c = column_number(trace);
  for (const auto& family : trace.families)
    for (const auto& set : family)
      if (set.size() == out.c) out.sets.push_back(set);
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());

  // every minimal set recurs, so the first family on the cycle carries all of them
  out.witness_k = trace.preperiod;
  const auto& family = trace.families.at(trace.preperiod - 1);
  for (const auto& set : out.sets) {
    auto it = std::lower_bound(family.begin(), family.end(), set);
    check_theorem(it != family.end() && *it == set, ErrorCode::InternalInvariantViolation,
                  "minimal column set " + set_name(sub.alphabet(), set) + " missing from the recurrent family");
    out.witness.push_back(trace.witnesses[trace.preperiod - 1][static_cast<std::size_t>(it - family.begin())]);
  }

  std::vector<bool> covered(sub.size(), false);
  std::size_t total = 0;
  for (const auto& set : out.sets) {
    total += set.size();
    for (Letter a : set) covered[a] = true;
    for (std::size_t j = 0; j < sub.length(); ++j) {
      const auto image = column_image(sub, set, j);
      check_theorem(std::binary_search(out.sets.begin(), out.sets.end(), image), ErrorCode::InternalInvariantViolation,
                    "sync family not closed under column maps");
    }
  }
  check_theorem(std::all_of(covered.begin(), covered.end(), [](bool x) { return x; }),
                ErrorCode::InternalInvariantViolation, "sync family does not cover the alphabet");
  out.partition = total == sub.size();
  return out;
}

Substitution synchronizing_part(const Substitution& sub) { return synchronizing_part(sub, sync_family(sub)); }

Substitution synchronizing_part(const Substitution& sub, const SyncFamily& family) {
  std::vector<std::string> names;
  for (const auto& set : family.sets) names.push_back(set_name(sub.alphabet(), set));
  std::vector<Letter> flat;
  for (const auto& set : family.sets)
    for (std::size_t j = 0; j < sub.length(); ++j) {
      auto image = column_image(sub, set, j);
      auto it = std::lower_bound(family.sets.begin(), family.sets.end(), image);
      flat.push_back(static_cast<Letter>(it - family.sets.begin()));
    }
  Substitution tilde(Alphabet(std::move(names)), sub.length(), std::move(flat));
  check_theorem(is_primitive(tilde).primitive, ErrorCode::InternalInvariantViolation, "synchronizing part is not primitive");
  check_theorem(column_number(tilde) == 1, ErrorCode::InternalInvariantViolation, "synchronizing part has column number above 1");
  check_theorem(height(tilde).h == 1, ErrorCode::InternalInvariantViolation, "synchronizing part has height above 1");
  return tilde;
}

namespace {

std::uint64_t strip_primes_of(std::uint64_t g, std::uint64_t lambda) {
  for (std::uint64_t d = std::gcd(g, lambda); d > 1; d = std::gcd(g, lambda)) g /= d;
  return g;
}

}  // namespace

HeightResult height(const FixedPointHandle& handle, const Limits& limits) {
  const Substitution& base = handle.base();
  const std::uint64_t lambda = base.length();
  std::uint64_t length = std::max<std::uint64_t>(10'000, checked_power(lambda, 3, limits.table_limit).value_or(limits.table_limit));
  length = std::min(length, limits.table_limit);
  constexpr int max_retries = 8;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const Word u = prefix(handle, length, limits);
    std::uint64_t g = 0;
    for (std::uint64_t n = 1; n < u.size(); ++n)
      if (u[n] == u[0]) g = std::gcd(g, n);
    if (g != 0) {
      const std::uint64_t h = strip_primes_of(g, lambda);
      std::vector<std::uint64_t> color(base.size(), std::numeric_limits<std::uint64_t>::max());
      bool consistent = true;
      for (std::uint64_t n = 0; n < u.size() && consistent; ++n) {
        auto& c = color[u[n]];
        if (c == std::numeric_limits<std::uint64_t>::max()) c = n % h;
        consistent = c == n % h;
      }
      consistent = consistent && std::none_of(color.begin(), color.end(),
                                              [](std::uint64_t c) { return c == std::numeric_limits<std::uint64_t>::max(); });
      for (Letter a = 0; a < base.size() && consistent; ++a)
        for (std::size_t j = 0; j < lambda && consistent; ++j)
          consistent = color[base.image(a, j)] == ((lambda % h) * color[a] + j) % h;
      if (consistent) return {h, g, std::move(color), true, length};
    }
    if (length >= limits.table_limit) break;
    length = std::min(length * 2, limits.table_limit);
  }
  fail(ErrorCode::CertificationFailed, "height coloring could not be certified (is the substitution primitive?)");
}

HeightResult height(const Substitution& sub, const Limits& limits) { return height(find_fixed_seed(sub, limits), limits); }

PureBase pure_base(const Substitution& sub, const Limits& limits) {
  const std::uint64_t h = height(sub, limits).h;
  if (h == 1) {
    std::vector<Word> blocks;
    for (Letter a = 0; a < sub.size(); ++a) blocks.push_back({a});
    return {sub, 1, std::move(blocks)};
  }
  const Word seed = prefix(find_fixed_seed(sub, limits), h, limits);
  std::map<Word, Letter> index{{seed, 0}};
  std::vector<Word> blocks{seed};
  std::vector<Letter> flat;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Word image = sub.apply(blocks[i]);
    for (std::size_t j = 0; j < sub.length(); ++j) {
      Word w(image.begin() + static_cast<std::ptrdiff_t>(j * h), image.begin() + static_cast<std::ptrdiff_t>((j + 1) * h));
      auto [it, inserted] = index.try_emplace(w, static_cast<Letter>(blocks.size()));
      if (inserted) blocks.push_back(std::move(w));
      flat.push_back(it->second);
    }
  }
  std::vector<std::string> names;
  for (const auto& w : blocks) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + sub.alphabet().name(w[i]);
    names.push_back(s + ")");
  }
  Substitution base(Alphabet(std::move(names)), sub.length(), std::move(flat));
  check_theorem(is_primitive(base).primitive, ErrorCode::InternalInvariantViolation, "pure base is not primitive");
  check_theorem(height(base, limits).h == 1, ErrorCode::InternalInvariantViolation, "pure base has height above 1");
  return {std::move(base), h, std::move(blocks)};
}

Classification classify(const Substitution& sub, const Limits& limits) {
  const auto trace = column_trace(sub);
  Classification out;
  out.c = column_number(trace);
  out.bijective = out.c == sub.size();
  out.quasi_bijective = true;
  for (std::size_t k = trace.preperiod; k <= trace.families.size(); ++k)
    for (const auto& set : trace.families[k - 1]) out.quasi_bijective = out.quasi_bijective && set.size() == out.c;
  const auto base = pure_base(sub, limits);
  out.h = base.h;
  out.c_pure_base = column_number(base.sub);
  out.synchronizing_case = out.c == out.h;
  return out;
}

ChIdentity check_ch_identity(const Substitution& sub, const Limits& limits) {
  ChIdentity out;
  out.c = column_number(sub);
  out.h = height(sub, limits).h;
  out.c_pure_base = column_number(pure_base(sub, limits).sub);
  check_theorem(out.c == out.h * out.c_pure_base, ErrorCode::IdentityViolation,
                "c = " + std::to_string(out.c) + " but h * c(pure base) = " + std::to_string(out.h) + " * " +
                    std::to_string(out.c_pure_base));
  return out;
}

WrapProfile wrap_profile(const Substitution& sub, std::size_t k_max) {
  if (k_max == 0) fail(ErrorCode::BadLength, "k_max must be positive");
  if (!checked_power(sub.length(), k_max, std::numeric_limits<std::uint64_t>::max()))
    fail(ErrorCode::Overflow, "length^k_max does not fit in 64 bits");
  WrapProfile out;
  LetterSet all(sub.size());
  std::iota(all.begin(), all.end(), Letter{0});
  // multiplicity of each column set among the columns of sub^k
  std::map<LetterSet, std::uint64_t> count{{all, 1}};
  double scale = 1.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::map<LetterSet, std::uint64_t> next;
    for (const auto& [set, n] : count)
      for (std::size_t j = 0; j < sub.length(); ++j) next[column_image(sub, set, j)] += n;
    count.swap(next);
    std::uint64_t singles = 0;
    for (const auto& [set, n] : count)
      if (set.size() == 1) singles += n;
    scale *= static_cast<double>(sub.length());
    out.singletons.push_back(singles);
    out.ratios.push_back(static_cast<double>(singles) / scale);
  }
  out.warning = column_number(sub) > 1;
  return out;
}

double dW_estimate(std::span<const Letter> a, std::span<const Letter> b, std::size_t window) {
  if (a.size() != b.size()) fail(ErrorCode::LengthMismatch, "sequences have different lengths");
  if (window == 0) fail(ErrorCode::BadLength, "window must be positive");
  if (a.size() < 2 * window) fail(ErrorCode::LengthMismatch, "sequences shorter than twice the window");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < window; ++i) mismatches += a[i] != b[i];
  std::size_t worst = mismatches;
  for (std::size_t s = window; s < a.size(); ++s) {
    mismatches += a[s] != b[s];
    mismatches -= a[s - window] != b[s - window];
    worst = std::max(worst, mismatches);
  }
  return static_cast<double>(worst) / static_cast<double>(window);
}

Word periodic_approximant(const FixedPointHandle& handle, std::uint64_t period, std::uint64_t length,
                          const Limits& limits) {
  if (period == 0) fail(ErrorCode::BadLength, "period must be positive");
  auto block = prefix(handle, std::min(period, length), limits);
  Word out(length);
  for (std::uint64_t i = 0; i < length; ++i) out[i] = block[i % period];
  return out;
}

}  // namespace substkit
