#include "substkit/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "substkit/error.hpp"

namespace substkit {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorCode::EmptyAlphabet, "alphabet is empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) fail(ErrorCode::ParseError, "empty symbol name");
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
      fail(ErrorCode::DuplicateSymbol, "duplicate symbol '" + names_[i] + "'");
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void validate(const SubstitutionDef& def) {
  Alphabet alphabet(def.alphabet);
  if (def.lambda < 2) fail(ErrorCode::BadLength, "length must be at least 2, got " + std::to_string(def.lambda));
  std::vector<bool> seen(alphabet.size(), false);
  for (const auto& [name, word] : def.rules) {
    auto from = alphabet.find(name);
    if (!from) fail(ErrorCode::UnknownSymbol, "rule for unknown symbol '" + name + "'");
    if (seen[*from]) fail(ErrorCode::DuplicateSymbol, "two rules for symbol '" + name + "'");
    seen[*from] = true;
    for (const auto& letter : word)
      if (!alphabet.find(letter))
        fail(ErrorCode::UnknownSymbol, "rule for '" + name + "' uses unknown symbol '" + letter + "'");
    if (static_cast<std::int64_t>(word.size()) != def.lambda)
      fail(ErrorCode::RuleLengthMismatch, "rule for '" + name + "' has " + std::to_string(word.size()) +
                                              " letters, expected " + std::to_string(def.lambda));
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a]) fail(ErrorCode::ParseError, "no rule for symbol '" + alphabet.name(static_cast<Letter>(a)) + "'");
}

Substitution::Substitution(Alphabet alphabet, std::size_t length, std::vector<Letter> flat_rules)
    : alphabet_(std::move(alphabet)), length_(length), rules_(std::move(flat_rules)) {
  if (alphabet_.size() == 0) fail(ErrorCode::EmptyAlphabet, "alphabet is empty");
  if (length_ < 2) fail(ErrorCode::BadLength, "length must be at least 2");
  if (rules_.size() != alphabet_.size() * length_)
    fail(ErrorCode::RuleLengthMismatch, "rule table does not match alphabet size times length");
  for (Letter x : rules_)
    if (x >= alphabet_.size()) fail(ErrorCode::UnknownSymbol, "rule letter out of range");
}

Substitution Substitution::from_def(const SubstitutionDef& def) {
  validate(def);
  Alphabet alphabet(def.alphabet);
  const auto length = static_cast<std::size_t>(def.lambda);
  std::vector<Letter> flat(alphabet.size() * length);
  for (const auto& [name, word] : def.rules) {
    const Letter from = *alphabet.find(name);
    for (std::size_t j = 0; j < length; ++j) flat[from * length + j] = *alphabet.find(word[j]);
  }
  return Substitution(std::move(alphabet), length, std::move(flat));
}

Substitution Substitution::from_chars(std::string_view letters, const std::vector<std::string>& rules) {
  SubstitutionDef def;
  for (char ch : letters) def.alphabet.emplace_back(1, ch);
  def.lambda = rules.empty() ? 0 : static_cast<std::int64_t>(rules.front().size());
  for (std::size_t i = 0; i < rules.size() && i < def.alphabet.size(); ++i) {
    std::vector<std::string> word;
    for (char ch : rules[i]) word.emplace_back(1, ch);
    def.rules.emplace_back(def.alphabet[i], std::move(word));
  }
  return from_def(def);
}

Word Substitution::apply(std::span<const Letter> word) const {
  Word out;
  out.reserve(word.size() * length_);
  for (Letter x : word) {
    auto r = rule(x);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<std::string> Substitution::rule_strings(std::string_view separator) const {
  std::vector<std::string> out;
  for (Letter a = 0; a < size(); ++a) {
    std::string s = alphabet_.name(a) + " -> ";
    bool first = true;
    for (Letter x : rule(a)) {
      if (!first) s += separator;
      s += alphabet_.name(x);
      first = false;
    }
    out.push_back(std::move(s));
  }
  return out;
}

SubstitutionDef Substitution::to_def() const {
  SubstitutionDef def;
  def.alphabet = alphabet_.names();
  def.lambda = static_cast<std::int64_t>(length_);
  for (Letter a = 0; a < size(); ++a) {
    std::vector<std::string> word;
    for (Letter x : rule(a)) word.push_back(alphabet_.name(x));
    def.rules.emplace_back(alphabet_.name(a), std::move(word));
  }
  return def;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (base != 0 && value > cap / base) return std::nullopt;
    value *= base;
  }
  if (value > cap) return std::nullopt;
  return value;
}

Substitution power(const Substitution& sub, std::uint64_t k, const Limits& limits) {
  if (k == 0) fail(ErrorCode::BadLength, "power exponent must be positive");
  const auto length = checked_power(sub.length(), k, limits.word_limit);
  if (!length)
    fail(ErrorCode::Overflow, "rules of the " + std::to_string(k) + "-th power exceed the word limit of " +
                                  std::to_string(limits.word_limit) + " letters");
  if (k == 1) return sub;
  // sub^(i+1)(a) = sub(sub^i(a)), letterwise concatenation
  std::vector<Letter> current = sub.flat();
  std::size_t current_length = sub.length();
  for (std::uint64_t i = 1; i < k; ++i) {
    const std::size_t next_length = current_length * sub.length();
    std::vector<Letter> next(sub.size() * next_length);
    for (Letter a = 0; a < sub.size(); ++a) {
      Letter* out = next.data() + a * next_length;
      const Letter* in = current.data() + a * current_length;
      for (std::size_t p = 0; p < current_length; ++p) {
        auto r = sub.rule(in[p]);
        std::copy(r.begin(), r.end(), out + p * sub.length());
      }
    }
    current.swap(next);
    current_length = next_length;
  }
  return Substitution(sub.alphabet(), current_length, std::move(current));
}

std::uint64_t IncidenceMatrix::column_sum(Letter from) const {
  std::uint64_t s = 0;
  for (Letter a = 0; a < n_; ++a) s += entry(a, from);
  return s;
}

IncidenceMatrix incidence(const Substitution& sub) {
  IncidenceMatrix m(sub.size());
  for (Letter from = 0; from < sub.size(); ++from)
    for (Letter a : sub.rule(from)) ++m.entry(a, from);
  return m;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool graph_is_primitive(const Substitution& sub) {
  const std::size_t n = sub.size();
  // strongly connected: everything reachable from 0 forwards and backwards
  std::vector<std::vector<Letter>> fwd(n), bwd(n);
  for (Letter a = 0; a < n; ++a)
    for (Letter x : sub.rule(a)) {
      fwd[a].push_back(x);
      bwd[x].push_back(a);
    }
  auto reach_all = [n](const std::vector<std::vector<Letter>>& adj, std::vector<std::int64_t>& level) {
    level.assign(n, -1);
    std::queue<Letter> q;
    level[0] = 0;
    q.push(0);
    std::size_t count = 1;
    while (!q.empty()) {
      Letter v = q.front();
      q.pop();
      for (Letter w : adj[v])
        if (level[w] < 0) {
          level[w] = level[v] + 1;
          ++count;
          q.push(w);
        }
    }
    return count == n;
  };
  std::vector<std::int64_t> level, unused;
  if (!reach_all(fwd, level) || !reach_all(bwd, unused)) return false;
  // aperiodic: gcd over edges of level[v] + 1 - level[w]
  std::int64_t period = 0;
  for (Letter v = 0; v < n; ++v)
    for (Letter w : fwd[v]) period = std::gcd(period, std::llabs(level[v] + 1 - level[w]));
  return period == 1;
}

}  // namespace

PrimitivityResult is_primitive(const Substitution& sub) {
  if (!graph_is_primitive(sub)) return {false, 0};
  const std::size_t n = sub.size();
  const std::size_t words = (n + 63) / 64;
  auto set_bit = [](Bits& b, Letter x) { b[x / 64] |= std::uint64_t{1} << (x % 64); };
  std::vector<Bits> succ(n, Bits(words, 0));
  for (Letter a = 0; a < n; ++a)
    for (Letter x : sub.rule(a)) set_bit(succ[a], x);
  Bits full(words, ~std::uint64_t{0});
  if (n % 64 != 0) full.back() = (std::uint64_t{1} << (n % 64)) - 1;

  // reach[b] = letters occurring in sub^k(b)
  std::vector<Bits> reach = succ;
  const std::uint64_t bound = n * n - 2 * n + 2;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (std::all_of(reach.begin(), reach.end(), [&](const Bits& r) { return r == full; })) return {true, k};
    std::vector<Bits> next(n, Bits(words, 0));
    for (Letter b = 0; b < n; ++b)
      for (Letter x = 0; x < n; ++x)
        if (reach[b][x / 64] >> (x % 64) & 1)
          for (std::size_t w = 0; w < words; ++w) next[b][w] |= succ[x][w];
    reach.swap(next);
  }
  fail(ErrorCode::InternalInvariantViolation, "primitive incidence graph did not reach a positive power within the Wielandt bound");
}

std::vector<double> densities(const Substitution& sub) {
  if (!is_primitive(sub).primitive) fail(ErrorCode::NotPrimitive, "letter densities need a primitive substitution");
  const std::size_t n = sub.size();
  const auto m = incidence(sub);
  const double lambda = static_cast<double>(sub.length());
  std::vector<double> p(n * n);  // column-stochastic M / lambda
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) p[a * n + b] = static_cast<double>(m.entry(a, b)) / lambda;

  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  auto step = [&](const std::vector<double>& mat) {
    for (std::size_t a = 0; a < n; ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < n; ++b) s += mat[a * n + b] * v[b];
      next[a] = s;
    }
    double diff = 0.0;
    for (std::size_t a = 0; a < n; ++a) diff = std::max(diff, std::abs(next[a] - v[a]));
    v.swap(next);
    return diff;
  };
  bool converged = false;
  for (int it = 0; it < 100000 && !converged; ++it) converged = step(p) < 1e-14;
  // slow mixing: keep iterating with squared matrices, i.e. on the iterates 2^m apart
  for (int sq = 0; sq < 200 && !converged; ++sq) {
    std::vector<double> p2(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t b = 0; b < n; ++b) p2[a * n + b] += p[a * n + k] * p[k * n + b];
    p.swap(p2);
    converged = step(p) < 1e-14;
  }
  double total = 0.0;
  for (double& x : v) {
    x = std::max(x, 0.0);
    total += x;
  }
  for (double& x : v) x /= total;
  return v;
}

FixedPointHandle::FixedPointHandle(Substitution base, Letter seed, std::uint64_t power_taken)
    : base_(std::move(base)), seed_(seed), power_taken_(power_taken) {
  if (seed_ >= base_.size()) fail(ErrorCode::IndexOutOfRange, "seed letter out of range");
  if (base_.image(seed_, 0) != seed_)
    fail(ErrorCode::InternalInvariantViolation, "seed image does not start with the seed");
}

Letter FixedPointHandle::letter_at(std::uint64_t n) const {
  std::uint32_t digits[64];
  int count = 0;
  const std::uint64_t length = base_.length();
  while (n > 0) {
    digits[count++] = static_cast<std::uint32_t>(n % length);
    n /= length;
  }
  Letter cur = seed_;
  while (count > 0) cur = base_.image(cur, digits[--count]);
  return cur;
}

FixedPointHandle find_fixed_seed(const Substitution& sub, const Limits& limits) {
  const std::size_t n = sub.size();
  std::vector<Letter> first(n), iterate(n);
  for (Letter a = 0; a < n; ++a) iterate[a] = first[a] = sub.image(a, 0);
  for (std::uint64_t l = 1; l <= n; ++l) {
    for (Letter a = 0; a < n; ++a)
      if (iterate[a] == a) return FixedPointHandle(power(sub, l, limits), a, l);
    for (Letter a = 0; a < n; ++a) iterate[a] = first[iterate[a]];
  }
  fail(ErrorCode::InternalInvariantViolation, "first-letter map has no periodic point");
}

Word prefix(const FixedPointHandle& handle, std::uint64_t length, const Limits& limits) {
  if (length == 0) fail(ErrorCode::BadLength, "prefix length must be positive");
  if (length > limits.table_limit)
    fail(ErrorCode::Overflow, "prefix of " + std::to_string(length) + " letters exceeds the table limit");
  const Substitution& base = handle.base();
  Word w{handle.seed()};
  while (w.size() < length) {
    const std::uint64_t need = (length + base.length() - 1) / base.length();
    std::span<const Letter> src(w.data(), std::min<std::uint64_t>(w.size(), need));
    w = base.apply(src);
  }
  w.resize(length);
  return w;
}

BlockExpander::BlockExpander(const FixedPointHandle& handle, std::uint64_t max_block)
    : handle_(handle), table_(handle.base()) {
  const std::uint64_t length = handle.base().length();
  while (block_ * length <= max_block) {
    block_ *= length;
    ++depth_;
  }
  if (depth_ > 0) table_ = power(handle.base(), depth_, Limits{max_block, max_block});
}

void BlockExpander::fill(std::uint64_t first, std::span<Letter> out) const {
  std::size_t written = 0;
  if (depth_ == 0) {
    for (auto& x : out) x = handle_.letter_at(first + written++);
    return;
  }
  while (written < out.size()) {
    const std::uint64_t pos = first + written;
    const std::uint64_t q = pos / block_;
    const std::uint64_t r = pos % block_;
    const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(block_ - r, out.size() - written));
    auto rule = table_.rule(handle_.letter_at(q));
    std::copy_n(rule.begin() + static_cast<std::ptrdiff_t>(r), take, out.begin() + static_cast<std::ptrdiff_t>(written));
    written += take;
  }
}

Quotient quotient_by_equal_rules(const Substitution& sub) {
  Quotient result{sub, {}, {}};
  result.map.resize(sub.size());
  std::iota(result.map.begin(), result.map.end(), Letter{0});
  std::vector<std::vector<std::string>> members(sub.size());
  for (Letter a = 0; a < sub.size(); ++a) members[a] = {sub.alphabet().name(a)};

  while (true) {
    const Substitution& cur = result.sub;
    std::map<std::vector<Letter>, Letter> classes;
    std::vector<Letter> cls(cur.size());
    for (Letter a = 0; a < cur.size(); ++a) {
      auto r = cur.rule(a);
      auto [it, inserted] = classes.emplace(std::vector<Letter>(r.begin(), r.end()), static_cast<Letter>(classes.size()));
      cls[a] = it->second;
    }
    if (classes.size() == cur.size()) break;
    // renumber classes by first member so the quotient keeps input order
    std::vector<Letter> order(classes.size(), Letter(-1));
    Letter next_id = 0;
    for (Letter a = 0; a < cur.size(); ++a)
      if (order[cls[a]] == Letter(-1)) order[cls[a]] = next_id++;
    std::vector<std::vector<std::string>> merged(classes.size());
    std::vector<Letter> representative(classes.size());
    for (Letter a = cur.size(); a-- > 0;) representative[order[cls[a]]] = a;
    for (Letter a = 0; a < cur.size(); ++a) {
      auto& m = merged[order[cls[a]]];
      m.insert(m.end(), members[a].begin(), members[a].end());
    }
    std::vector<std::string> names;
    for (const auto& m : merged) {
      std::string s;
      for (const auto& x : m) s += (s.empty() ? "" : "=") + x;
      names.push_back(s);
    }
    std::vector<Letter> flat;
    for (Letter c = 0; c < classes.size(); ++c)
      for (Letter x : cur.rule(representative[c])) flat.push_back(order[cls[x]]);
    for (auto& m : result.map) m = order[cls[m]];
    members = std::move(merged);
    result.sub = Substitution(Alphabet(std::move(names)), cur.length(), std::move(flat));
    result.sizes.push_back(result.sub.size());
  }
  return result;
}

}  // namespace substkit
