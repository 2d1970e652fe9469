#include "substkit/joinings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "substkit/error.hpp"

namespace substkit {

Join join(const Substitution& theta, const Substitution& zeta, const std::vector<LetterPair>& seeds) {
  if (theta.length() != zeta.length()) fail(ErrorCode::LengthMismatch, "joined substitutions have different lengths");
  if (seeds.empty()) fail(ErrorCode::EmptySeeds, "no seed pairs given");
  std::set<LetterPair> closure;
  std::queue<LetterPair> pending;
  for (const auto& s : seeds) {
    if (s.first >= theta.size() || s.second >= zeta.size()) fail(ErrorCode::IndexOutOfRange, "seed pair out of range");
    if (closure.insert(s).second) pending.push(s);
  }
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop();
    for (std::size_t j = 0; j < theta.length(); ++j) {
      LetterPair next{theta.image(a, j), zeta.image(b, j)};
      if (closure.insert(next).second) pending.push(next);
    }
  }
  Join out{Substitution(theta), {closure.begin(), closure.end()}, false, false};
  std::map<LetterPair, Letter> index;
  std::vector<std::string> names;
  for (const auto& [a, b] : out.pairs) {
    index.emplace(LetterPair{a, b}, static_cast<Letter>(names.size()));
    names.push_back("(" + theta.alphabet().name(a) + "," + zeta.alphabet().name(b) + ")");
  }
  std::vector<Letter> flat;
  for (const auto& [a, b] : out.pairs)
    for (std::size_t j = 0; j < theta.length(); ++j) flat.push_back(index.at({theta.image(a, j), zeta.image(b, j)}));
  out.sub = Substitution(Alphabet(std::move(names)), theta.length(), std::move(flat));

  std::vector<bool> left(theta.size(), false), right(zeta.size(), false);
  for (const auto& [a, b] : out.pairs) left[a] = right[b] = true;
  out.surjective = std::all_of(left.begin(), left.end(), [](bool x) { return x; }) &&
                   std::all_of(right.begin(), right.end(), [](bool x) { return x; });
  out.primitive = is_primitive(out.sub).primitive;
  return out;
}

JoinBounds join_bounds_check(const Substitution& theta, const Substitution& zeta, const Substitution& joined,
                             const Limits& limits) {
  JoinBounds b;
  b.c_theta = column_number(theta);
  b.c_zeta = column_number(zeta);
  b.c_joined = column_number(joined);
  b.h_theta = height(theta, limits).h;
  b.h_zeta = height(zeta, limits).h;
  b.h_joined = height(joined, limits).h;
  check_theorem(std::max(b.c_theta, b.c_zeta) <= b.c_joined && b.c_joined <= b.c_theta * b.c_zeta,
                ErrorCode::BoundViolation, "column number of the joining outside [max, product]");
  check_theorem(b.h_joined % std::lcm(b.h_theta, b.h_zeta) == 0, ErrorCode::BoundViolation,
                "height of the joining not divisible by the lcm of the heights");
  return b;
}

SyncJoin theta_sync_join(const Substitution& sub, const Limits& limits) {
  SyncJoin out{sub, sub, sub, sync_family(sub), {}, 1, 0};
  const Substitution tilde = synchronizing_part(sub, out.family);
  std::map<LetterPair, Letter> index;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < out.family.sets.size(); ++m)
    for (Letter a : out.family.sets[m]) {
      index.emplace(LetterPair{a, static_cast<Letter>(m)}, static_cast<Letter>(out.pairs.size()));
      out.pairs.emplace_back(a, static_cast<Letter>(m));
      names.push_back("(" + sub.alphabet().name(a) + "," + tilde.alphabet().name(static_cast<Letter>(m)) + ")");
    }
  std::vector<Letter> flat;
  for (const auto& [a, m] : out.pairs)
    for (std::size_t j = 0; j < sub.length(); ++j) {
      auto it = index.find({sub.image(a, j), tilde.image(m, j)});
      check_theorem(it != index.end(), ErrorCode::InternalInvariantViolation, "joining leaves {(a, M) : a in M}");
      flat.push_back(it->second);
    }
  const Substitution joined(Alphabet(std::move(names)), sub.length(), std::move(flat));
  const auto handle = find_fixed_seed(joined, limits);
  out.power_taken = handle.power_taken();
  out.seed = handle.seed();
  out.joined = handle.base();
  out.theta = power(sub, out.power_taken, limits);
  out.tilde = power(tilde, out.power_taken, limits);

  check_theorem(is_primitive(out.joined).primitive, ErrorCode::InternalInvariantViolation, "theta v theta~ is not primitive");
  check_theorem(column_number(out.joined) == out.family.c, ErrorCode::InternalInvariantViolation,
                "column number of theta v theta~ differs from that of theta");
  check_theorem(height(out.joined, limits).h == height(sub, limits).h, ErrorCode::InternalInvariantViolation,
                "height of theta v theta~ differs from that of theta");
  return out;
}

Letter image_at(const Substitution& sub, Letter a, const Digits& digits) {
  for (auto d : digits) a = sub.image(a, d);
  return a;
}

Digits to_digits(std::uint64_t j, std::uint64_t base, std::uint64_t k) {
  Digits d(k);
  for (std::uint64_t i = k; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(j % base);
    j /= base;
  }
  if (j != 0) fail(ErrorCode::IndexOutOfRange, "column index exceeds length^k");
  return d;
}

OrderedJoin order_and_rename(const Substitution& sub, const Limits& limits) {
  return order_and_rename(theta_sync_join(sub, limits));
}

OrderedJoin order_and_rename(SyncJoin base) {
  Substitution placeholder = base.theta;
  OrderedJoin oj{std::move(base), 0, 0, 0, 0, {}, {}, std::move(placeholder)};
  const SyncJoin& sj = oj.base;
  const Substitution& theta = sj.theta;
  const Substitution& tilde = sj.tilde;
  const std::size_t nsets = tilde.size();
  oj.c = sj.family.c;
  oj.a0 = sj.pairs[sj.seed].first;
  oj.m0 = sj.pairs[sj.seed].second;

  // smallest (k, j) whose column map on X is constant M0
  using ColumnMap = std::vector<Letter>;
  std::map<ColumnMap, Digits> level;
  for (std::uint32_t j = 0; j < tilde.length(); ++j) {
    ColumnMap f(nsets);
    for (Letter m = 0; m < nsets; ++m) f[m] = tilde.image(m, j);
    level.try_emplace(f, Digits{j});
  }
  std::set<std::vector<ColumnMap>> seen;
  Digits found;
  while (found.empty()) {
    for (const auto& [f, digits] : level)
      if (std::all_of(f.begin(), f.end(), [&](Letter m) { return m == oj.m0; }) && (found.empty() || digits < found))
        found = digits;
    if (!found.empty()) break;
    std::vector<ColumnMap> key;
    for (const auto& entry : level) key.push_back(entry.first);
    check_theorem(seen.insert(key).second, ErrorCode::InternalInvariantViolation,
                  "no column of a power of theta~ is constant M0");
    std::map<ColumnMap, Digits> next;
    for (const auto& [f, digits] : level)
      for (std::uint32_t j = 0; j < tilde.length(); ++j) {
        ColumnMap g(nsets);
        for (Letter m = 0; m < nsets; ++m) g[m] = tilde.image(f[m], j);
        Digits candidate = digits;
        candidate.push_back(j);
        auto [it, inserted] = next.try_emplace(g, candidate);
        if (!inserted && candidate < it->second) it->second = std::move(candidate);
      }
    level.swap(next);
  }

  // iterate that column until it fixes every letter of M0
  const LetterSet& m0_set = sj.family.sets[oj.m0];
  std::uint64_t r = 1;
  for (Digits acc = found;; ++r) {
    bool fixed = true;
    for (Letter a : m0_set) fixed = fixed && image_at(theta, a, acc) == a;
    if (fixed) {
      oj.j0 = acc;
      break;
    }
    check_theorem(r <= saturating_factorial(oj.c), ErrorCode::InternalInvariantViolation,
                  "column map on M0 is not a permutation");
    acc.insert(acc.end(), found.begin(), found.end());
  }
  oj.k0 = oj.j0.size();

  std::vector<std::size_t> rank0(theta.size(), 0);
  std::vector<Letter> m0_order{oj.a0};
  for (Letter a : m0_set)
    if (a != oj.a0) m0_order.push_back(a);
  for (std::size_t i = 0; i < m0_order.size(); ++i) rank0[m0_order[i]] = i;

  std::vector<std::vector<std::size_t>> rank(nsets, std::vector<std::size_t>(theta.size(), 0));
  for (std::size_t m = 0; m < nsets; ++m) {
    std::vector<Letter> letters = sj.family.sets[m];
    auto key = [&](Letter a) { return rank0[image_at(theta, a, oj.j0)]; };
    std::stable_sort(letters.begin(), letters.end(), [&](Letter x, Letter y) { return key(x) < key(y); });
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      check_theorem(key(letters[i]) != key(letters[i + 1]), ErrorCode::InternalInvariantViolation,
                    "synchronizing column is not injective on a set of X");
    for (std::size_t i = 0; i < letters.size(); ++i) rank[m][letters[i]] = i;
    oj.order.push_back(std::move(letters));
  }

  std::vector<std::string> names;
  std::vector<Letter> flat;
  for (std::size_t m = 0; m < nsets; ++m)
    for (std::size_t i = 0; i < oj.c; ++i)
      names.push_back("(" + std::to_string(i) + "," + tilde.alphabet().name(static_cast<Letter>(m)) + ")");
  for (std::size_t m = 0; m < nsets; ++m)
    for (std::size_t i = 0; i < oj.c; ++i) {
      const Letter a = oj.order[m][i];
      for (std::size_t j = 0; j < theta.length(); ++j) {
        const Letter next_m = tilde.image(static_cast<Letter>(m), j);
        const Letter next_a = theta.image(a, j);
        check_theorem(std::binary_search(sj.family.sets[next_m].begin(), sj.family.sets[next_m].end(), next_a),
                      ErrorCode::InternalInvariantViolation, "theta(a)_j not in theta~(M)_j");
        flat.push_back(oj.letter(rank[next_m][next_a], next_m));
      }
    }
  oj.sub = Substitution(Alphabet(std::move(names)), theta.length(), std::move(flat));

  for (std::size_t m = 0; m < nsets; ++m) {
    for (std::size_t j = 0; j < theta.length(); ++j) {
      std::vector<bool> hit(oj.c, false);
      for (std::size_t i = 0; i < oj.c; ++i) hit[oj.sub.image(oj.letter(i, m), j) % oj.c] = true;
      check_theorem(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }), ErrorCode::InternalInvariantViolation,
                    "column of Theta~ is not relatively bijective");
    }
    for (std::size_t i = 0; i < oj.c; ++i)
      check_theorem(image_at(oj.sub, oj.letter(i, m), oj.j0) == oj.letter(i, oj.m0), ErrorCode::InternalInvariantViolation,
                    "synchronizing column of Theta~ does not send (i, M) to (i, M0)");
  }
  return oj;
}

Permutation column_permutation(const OrderedJoin& oj, std::size_t m, std::size_t j) {
  if (m >= oj.sets() || j >= oj.sub.length()) fail(ErrorCode::IndexOutOfRange, "column permutation index out of range");
  std::vector<std::uint32_t> forward(oj.c);
  for (std::size_t n = 0; n < oj.c; ++n) forward[n] = oj.sub.image(oj.letter(n, m), j) % static_cast<Letter>(oj.c);
  return Permutation(std::move(forward)).inverse();
}

Permutation sigma_k(const OrderedJoin& oj, std::size_t m, const Digits& digits) {
  Permutation result = Permutation::identity(oj.c);
  for (auto d : digits) {
    result = result * column_permutation(oj, m, d);
    m = oj.base.tilde.image(static_cast<Letter>(m), d);
  }
  return result;
}

Permutation sigma_k(const OrderedJoin& oj, std::size_t m, std::uint64_t k, std::uint64_t j) {
  return sigma_k(oj, m, to_digits(j, oj.sub.length(), k));
}

std::optional<std::size_t> GroupClosure::find(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::size_t GroupClosure::inverse(std::size_t x) const { return *find(elements[x].inverse()); }

GroupClosure group_closure(const std::vector<Permutation>& generators, std::size_t degree) {
  GroupClosure g;
  g.generators = generators;
  std::sort(g.generators.begin(), g.generators.end());
  g.generators.erase(std::unique(g.generators.begin(), g.generators.end()), g.generators.end());
  const std::uint64_t limit = saturating_factorial(degree);
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::queue<Permutation> pending;
  pending.push(Permutation::identity(degree));
  while (!pending.empty()) {
    const Permutation x = pending.front();
    pending.pop();
    for (const auto& s : g.generators) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        check_theorem(seen.size() <= limit, ErrorCode::GroupTooLarge, "permutation group exceeds c!");
        pending.push(std::move(y));
      }
    }
  }
  g.elements.assign(seen.begin(), seen.end());  // identity is the smallest image table
  g.table.assign(g.elements.size(), std::vector<std::size_t>(g.elements.size()));
  for (std::size_t x = 0; x < g.elements.size(); ++x)
    for (std::size_t y = 0; y < g.elements.size(); ++y) g.table[x][y] = *g.find(g.elements[x] * g.elements[y]);
  return g;
}

GroupClosure group_closure(const OrderedJoin& oj) {
  std::vector<Permutation> generators;
  for (std::size_t m = 0; m < oj.sets(); ++m)
    for (std::size_t j = 0; j < oj.sub.length(); ++j) generators.push_back(column_permutation(oj, m, j));
  return group_closure(generators, oj.c);
}

GroupExtension group_extension(OrderedJoin oj_in, const Limits& limits) {
  Substitution placeholder = oj_in.base.tilde;
  GroupExtension ge{std::move(oj_in), {}, 1, placeholder, placeholder, {}, 1, {}, {}, {}};
  const OrderedJoin& oj = ge.oj;
  ge.group = group_closure(oj);
  const auto& group = ge.group;
  const std::size_t nsets = oj.sets();
  const std::size_t lambda = oj.sub.length();

  std::vector<std::size_t> sigma(nsets * lambda);
  for (std::size_t m = 0; m < nsets; ++m)
    for (std::size_t j = 0; j < lambda; ++j) sigma[m * lambda + j] = *group.find(column_permutation(oj, m, j));

  std::vector<std::string> names;
  std::vector<Letter> flat;
  for (std::size_t g = 0; g < group.elements.size(); ++g)
    for (std::size_t m = 0; m < nsets; ++m)
      names.push_back("(" + group.elements[g].cycles() + "," + oj.base.tilde.alphabet().name(static_cast<Letter>(m)) + ")");
  for (std::size_t g = 0; g < group.elements.size(); ++g)
    for (std::size_t m = 0; m < nsets; ++m)
      for (std::size_t j = 0; j < lambda; ++j)
        flat.push_back(ge.letter(group.table[g][sigma[m * lambda + j]], oj.base.tilde.image(static_cast<Letter>(m), j)));
  const Substitution hat(Alphabet(std::move(names)), lambda, std::move(flat));

  ge.t = group.elements[sigma[oj.m0 * lambda]].order();
  ge.sub = power(hat, ge.t, limits);
  ge.tilde = power(oj.base.tilde, ge.t, limits);
  const std::size_t big = ge.sub.length();
  ge.sigma_hat.resize(nsets * big);
  for (std::size_t m = 0; m < nsets; ++m)
    for (std::size_t j = 0; j < big; ++j) ge.sigma_hat[m * big + j] = ge.group_of(ge.sub.image(ge.letter(0, m), j));
  for (std::size_t g = 0; g < group.elements.size(); ++g)
    check_theorem(ge.sub.image(ge.letter(g, oj.m0), 0) == ge.letter(g, oj.m0), ErrorCode::InternalInvariantViolation,
                  "normalized group extension does not fix (g, M0)");

  const auto primitivity = is_primitive(ge.sub);
  check_theorem(primitivity.primitive, ErrorCode::InternalInvariantViolation, "group extension is not primitive");
  check_theorem(column_number(ge.sub) == group.elements.size(), ErrorCode::InternalInvariantViolation,
                "column number of the group extension differs from |G|");

  const auto h = height(ge.fixed_point(), limits);
  ge.h_hat = h.h;
  for (std::size_t g = 0; g < group.elements.size(); ++g) {
    ge.f.push_back(h.coloring[ge.letter(g, oj.m0)]);
    if (ge.f.back() == 0) ge.kernel.push_back(g);
  }
  for (std::size_t x = 0; x < group.elements.size(); ++x)
    for (std::size_t y = 0; y < group.elements.size(); ++y)
      check_theorem(ge.f[group.table[x][y]] == (ge.f[x] + ge.f[y]) % ge.h_hat, ErrorCode::InternalInvariantViolation,
                    "height coloring of G is not a homomorphism");
  check_theorem(ge.kernel.size() * ge.h_hat == group.elements.size(), ErrorCode::InternalInvariantViolation,
                "kernel of the height homomorphism does not have index h");

  for (std::size_t m = 0; m < nsets; ++m)
    check_theorem(sigma_k(oj, m, oj.j0).is_identity(), ErrorCode::InternalInvariantViolation,
                  "sigma at the synchronizing column is not the identity");

  // for every M some column of a power sends (g, M0) to (g, M) for all g
  ge.kaem.assign(nsets, {0, {}});
  std::vector<bool> done(nsets, false);
  std::map<std::pair<std::size_t, std::size_t>, Digits> level{{{0, oj.m0}, {}}};
  for (std::uint64_t k = 1; k <= primitivity.witness; ++k) {
    std::map<std::pair<std::size_t, std::size_t>, Digits> next;
    for (const auto& [state, digits] : level)
      for (std::uint32_t j = 0; j < big; ++j) {
        std::pair<std::size_t, std::size_t> s{group.table[state.first][ge.sigma_hat[state.second * big + j]],
                                              ge.tilde.image(static_cast<Letter>(state.second), j)};
        Digits candidate = digits;
        candidate.push_back(j);
        auto [it, inserted] = next.try_emplace(s, candidate);
        if (!inserted && candidate < it->second) it->second = std::move(candidate);
      }
    level.swap(next);
    for (const auto& [state, digits] : level)
      if (state.first == 0 && !done[state.second]) {
        done[state.second] = true;
        ge.kaem[state.second] = {k, digits};
      }
  }
  check_theorem(std::all_of(done.begin(), done.end(), [](bool x) { return x; }), ErrorCode::InternalInvariantViolation,
                "some (g, M) is not reached from (g, M0) by a common column");
  return ge;
}

std::optional<Letter> Eta::find(const EtaTriple& x) const {
  auto it = std::find(letters.begin(), letters.end(), x);
  if (it == letters.end()) return std::nullopt;
  return static_cast<Letter>(it - letters.begin());
}

Eta eta(const GroupExtension& ge) {
  const auto& table = ge.group.table;
  const auto& tilde = ge.tilde;
  const std::size_t big = ge.length();
  auto sig = [&](std::size_t m, std::size_t j) { return ge.sigma_hat[m * big + j]; };
  auto inv = [&](std::size_t g) { return ge.group.inverse(g); };
  const std::size_t m0 = ge.oj.m0;

  auto rule = [&](const EtaTriple& x, std::size_t j) {
    if (j + 1 < big)
      return EtaTriple{table[inv(sig(x.m, j + 1))][sig(x.m, j)], tilde.image(static_cast<Letter>(x.m), j),
                       tilde.image(static_cast<Letter>(x.m), j + 1)};
    return EtaTriple{table[table[inv(sig(x.m_next, 0))][x.g]][sig(x.m, big - 1)],
                     tilde.image(static_cast<Letter>(x.m), big - 1), tilde.image(static_cast<Letter>(x.m_next), 0)};
  };

  Eta e{Substitution(ge.sub), {EtaTriple{table[inv(sig(m0, 1))][sig(m0, 0)], m0, tilde.image(static_cast<Letter>(m0), 1)}}};
  std::map<EtaTriple, Letter> index{{e.letters[0], 0}};
  std::vector<Letter> flat;
  for (std::size_t i = 0; i < e.letters.size(); ++i)
    for (std::size_t j = 0; j < big; ++j) {
      const EtaTriple y = rule(e.letters[i], j);
      auto [it, inserted] = index.try_emplace(y, static_cast<Letter>(e.letters.size()));
      if (inserted) e.letters.push_back(y);
      flat.push_back(it->second);
    }
  std::vector<std::string> names;
  for (const auto& x : e.letters)
    names.push_back("(" + ge.group.elements[x.g].cycles() + "," + tilde.alphabet().name(static_cast<Letter>(x.m)) + "," +
                    tilde.alphabet().name(static_cast<Letter>(x.m_next)) + ")");
  e.sub = Substitution(Alphabet(std::move(names)), big, std::move(flat));
  check_theorem(e.sub.image(0, 0) == 0, ErrorCode::InternalInvariantViolation, "seed window of eta is not a fixed seed");
  check_theorem(is_primitive(e.sub).primitive, ErrorCode::InternalInvariantViolation, "eta is not primitive");
  check_theorem(column_number(e.sub) == 1, ErrorCode::InternalInvariantViolation, "eta has column number above 1");
  return e;
}

EtaH eta_h(const GroupExtension& ge, const Eta& e, const Limits& limits) {
  const std::uint64_t h = ge.h_hat;
  const std::size_t big = ge.length();
  std::vector<std::string> residues;
  std::vector<Letter> flat;
  for (std::uint64_t i = 0; i < h; ++i) {
    residues.push_back(std::to_string(i));
    for (std::size_t j = 0; j < big; ++j) flat.push_back(static_cast<Letter>((big % h * i + j) % h));
  }
  Substitution p(Alphabet(std::move(residues)), big, std::move(flat));
  if (h == 1) {
    std::vector<LetterPair> pairs;
    for (Letter x = 0; x < e.sub.size(); ++x) pairs.emplace_back(x, 0);
    return {e.sub, std::move(p), std::move(pairs), 1};
  }
  auto joined = join(e.sub, p, {{0, 0}});
  check_theorem(joined.primitive, ErrorCode::InternalInvariantViolation, "eta_h is not primitive");
  check_theorem(column_number(joined.sub) == h, ErrorCode::InternalInvariantViolation, "column number of eta_h differs from h");
  check_theorem(height(joined.sub, limits).h == h, ErrorCode::InternalInvariantViolation, "height of eta_h differs from h");
  return {std::move(joined.sub), std::move(p), std::move(joined.pairs), h};
}

std::vector<std::optional<Letter>> sliding_code(const GroupExtension& ge, const Eta& e, std::span<const Letter> seq) {
  std::vector<std::optional<Letter>> out;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    const std::size_t g = ge.group_of(seq[n]);
    const std::size_t g_next = ge.group_of(seq[n + 1]);
    out.push_back(e.find({ge.group.table[ge.group.inverse(g_next)][g], ge.set_of(seq[n]), ge.set_of(seq[n + 1])}));
  }
  return out;
}

Word v_tau(const GroupExtension& ge, std::span<const Letter> seq, const Permutation& tau) {
  const auto t = tau.size() == ge.oj.c ? ge.group.find(tau) : std::nullopt;
  if (!t) fail(ErrorCode::NotInGroup, "permutation " + tau.cycles() + " is not in G");
  Word out;
  out.reserve(seq.size());
  for (Letter x : seq) {
    if (x >= ge.sub.size()) fail(ErrorCode::IndexOutOfRange, "letter outside the group extension alphabet");
    out.push_back(ge.letter(ge.group.table[*t][ge.group_of(x)], ge.set_of(x)));
  }
  return out;
}

Word project_to_theta(const OrderedJoin& oj, std::span<const Letter> seq) {
  Word out;
  out.reserve(seq.size());
  for (Letter x : seq) {
    if (x >= oj.sub.size()) fail(ErrorCode::IndexOutOfRange, "letter outside {0..c-1} x X");
    out.push_back(oj.order[x / oj.c][x % oj.c]);
  }
  return out;
}

}  // namespace substkit
