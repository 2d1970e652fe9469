#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "substkit/error.hpp"
#include "substkit/fixtures.hpp"
#include "substkit/joinings.hpp"

using namespace substkit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariantViolation;
}

std::string rule_text(const Substitution& s, Letter a) {
  std::string out;
  for (auto x : s.rule(a)) out += s.alphabet().name(x) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string rule_of(const Substitution& s, std::string_view name) { return rule_text(s, *s.alphabet().find(name)); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

// Ordered join and the tower of one fixture, built once per test.
struct Tower {
  OrderedJoin oj;
  GroupExtension ge;
  Eta e;
  explicit Tower(std::string_view name)
      : oj(order_and_rename(load_fixture(name))), ge(group_extension(oj)), e(eta(ge)) {}
};

}  // namespace

TEST_CASE("generic join on the height-two fixture") {
  auto sub = load_fixture("height_two");
  auto j = join(sub, sub, {{0, 1}});
  CHECK(j.pairs == std::vector<LetterPair>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(j.primitive);
  CHECK(j.surjective);
  CHECK(j.sub.alphabet().name(0) == "(0,1)");
  for (Letter x = 0; x < j.sub.size(); ++x)
    for (std::size_t k = 0; k < sub.length(); ++k) {
      auto [a, b] = j.pairs[x];
      CHECK(j.pairs[j.sub.image(x, k)] == LetterPair{sub.image(a, k), sub.image(b, k)});
    }
}

TEST_CASE("diagonal and full joins") {
  auto sub = load_fixture("three_letter_cover");
  auto diag = join(sub, sub, {{0, 0}});
  REQUIRE(diag.sub.size() == 3);
  for (Letter x = 0; x < 3; ++x) {
    CHECK(diag.pairs[x].first == diag.pairs[x].second);
    for (std::size_t k = 0; k < 2; ++k) CHECK(diag.pairs[diag.sub.image(x, k)].first == sub.image(diag.pairs[x].first, k));
  }
  CHECK(diag.primitive);
  auto bounds = join_bounds_check(sub, sub, diag.sub);
  CHECK(bounds.c_joined == bounds.c_theta);
  CHECK(bounds.h_joined == bounds.h_theta);

  std::vector<LetterPair> all;
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b) all.push_back({a, b});
  auto full = join(sub, sub, all);
  CHECK(full.sub.size() == 9);
  CHECK_FALSE(full.primitive);
}

TEST_CASE("join errors") {
  auto a = load_fixture("thue_morse");
  auto b = load_fixture("height_two");
  CHECK(code_of([&] { join(a, b, {{0, 0}}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { join(a, a, {}); }) == ErrorCode::EmptySeeds);
  CHECK(code_of([&] { join(a, a, {{0, 5}}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("theta v theta~") {
  auto rs = theta_sync_join(load_fixture("rudin_shapiro"));
  CHECK(rs.joined.size() == 4);
  CHECK(rule_of(rs.joined, "(a,{a,d})") == "(a,{a,d}) (b,{b,c})");
  CHECK(rule_of(rs.joined, "(d,{a,d})") == "(d,{a,d}) (c,{b,c})");
  CHECK(rule_of(rs.joined, "(b,{b,c})") == "(a,{a,d}) (c,{b,c})");
  CHECK(rule_of(rs.joined, "(c,{b,c})") == "(d,{a,d}) (b,{b,c})");

  auto ex1 = theta_sync_join(load_fixture("three_letter_cover"));
  CHECK(ex1.joined.size() == 4);

  auto h2 = theta_sync_join(load_fixture("height_two"));
  CHECK(height(h2.joined).h == 2);
  CHECK(height(h2.theta).h == 2);

  for (const auto& name : oracle::primitive_fixtures()) {
    auto sub = load_fixture(name);
    auto sj = theta_sync_join(sub);
    CHECK(sj.joined.image(sj.seed, 0) == sj.seed);
    CHECK(is_primitive(sj.joined).primitive);
    CHECK(column_number(sj.joined) == column_number(sub));
    CHECK(height(sj.joined).h == height(sub).h);
    CHECK(sj.theta == power(sub, sj.power_taken));
    CHECK_NOTHROW(join_bounds_check(sj.theta, sj.tilde, sj.joined));
    // rules act coordinatewise
    for (Letter x = 0; x < sj.joined.size(); ++x)
      for (std::size_t j = 0; j < sj.joined.length(); ++j) {
        auto [a, m] = sj.pairs[x];
        auto [a2, m2] = sj.pairs[sj.joined.image(x, j)];
        CHECK(a2 == sj.theta.image(a, j));
        CHECK(m2 == sj.tilde.image(static_cast<Letter>(m), j));
      }
  }
}

TEST_CASE("ordered renaming of Rudin-Shapiro") {
  auto oj = order_and_rename(load_fixture("rudin_shapiro"));
  CHECK(oj.c == 2);
  CHECK(rule_of(oj.sub, "(0,{a,d})") == "(0,{a,d}) (0,{b,c})");
  CHECK(rule_of(oj.sub, "(1,{a,d})") == "(1,{a,d}) (1,{b,c})");
  CHECK(rule_of(oj.sub, "(0,{b,c})") == "(0,{a,d}) (1,{b,c})");
  CHECK(rule_of(oj.sub, "(1,{b,c})") == "(1,{a,d}) (0,{b,c})");
  auto proj = project_to_theta(oj, Word{oj.letter(0, 0), oj.letter(1, 0)});
  const auto& names = oj.base.theta.alphabet();
  CHECK(names.name(proj[0]) == "a");
  CHECK(names.name(proj[1]) == "d");
}

TEST_CASE("ordered join invariants") {
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    const auto& tilde = oj.base.tilde;
    CHECK(oj.order[oj.m0].front() == oj.a0);
    for (std::size_t m = 0; m < oj.sets(); ++m) {
      CHECK(std::set<Letter>(oj.order[m].begin(), oj.order[m].end()).size() == oj.c);
      for (std::size_t j = 0; j < oj.sub.length(); ++j) {
        std::set<std::size_t> firsts;
        for (std::size_t i = 0; i < oj.c; ++i) {
          Letter y = oj.sub.image(oj.letter(i, m), j);
          CHECK(y / oj.c == tilde.image(static_cast<Letter>(m), j));
          firsts.insert(y % oj.c);
        }
        CHECK(firsts.size() == oj.c);
      }
      // Theta~^k0 at j0 sends (i, M) to (i, M0)
      for (std::size_t i = 0; i < oj.c; ++i) CHECK(image_at(oj.sub, oj.letter(i, m), oj.j0) == oj.letter(i, oj.m0));
      CHECK(sigma_k(oj, m, oj.j0).is_identity());
    }
    CHECK(oj.j0.size() == oj.k0);
  }
}

TEST_CASE("projection of the ordered join reproduces the fixed point") {
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    auto big = prefix(FixedPointHandle(oj.sub, oj.letter(0, oj.m0)), 10000);
    auto small = prefix(FixedPointHandle(oj.base.theta, oj.a0), 10000);
    CHECK_MESSAGE(project_to_theta(oj, big) == small, name);
  }
  auto oj = order_and_rename(load_fixture("thue_morse"));
  CHECK(code_of([&] { project_to_theta(oj, Word{99}); }) == ErrorCode::IndexOutOfRange);

  // column number one: every set is a singleton
  auto sync = order_and_rename(Substitution::from_chars("ab", {"ab", "aa"}));
  CHECK(sync.c == 1);
  for (std::size_t m = 0; m < sync.sets(); ++m) {
    auto p = project_to_theta(sync, Word{sync.letter(0, m)});
    CHECK(p[0] == sync.base.family.sets[m][0]);
  }
}

TEST_CASE("column permutations of the bijective example") {
  auto oj = order_and_rename(load_fixture("bijective_s3"));
  REQUIRE(oj.c == 3);
  CHECK(column_permutation(oj, 0, 0).is_identity());
  CHECK(column_permutation(oj, 0, 1).cycles() == "(12)");
  CHECK(column_permutation(oj, 0, 2).cycles() == "(021)");
  CHECK(sigma_k(oj, 0, 1, 2) == column_permutation(oj, 0, 2));
  CHECK(sigma_k(oj, 0, 2, 5) == parse_cycles("(12)", 3) * parse_cycles("(021)", 3));

  auto rs = order_and_rename(load_fixture("rudin_shapiro"));
  CHECK(column_permutation(rs, 1, 1).cycles() == "(01)");
}

TEST_CASE("column permutation is the inverse of the forward column map") {
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    for (std::size_t m = 0; m < oj.sets(); ++m)
      for (std::size_t j = 0; j < oj.sub.length(); ++j) {
        auto s = column_permutation(oj, m, j);
        for (std::uint32_t n = 0; n < oj.c; ++n) CHECK(s(oj.sub.image(oj.letter(n, m), j) % oj.c) == n);
      }
  }
}

TEST_CASE("sigma_k agrees with direct expansion of powers") {
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    const std::uint64_t L = oj.sub.length();
    for (std::uint64_t k = 1; k <= 3; ++k) {
      auto pk = power(oj.sub, k);
      auto tk = power(oj.base.tilde, k);
      for (std::size_t m = 0; m < oj.sets(); ++m)
        for (std::uint64_t j = 0; j < ipow(L, k); ++j) {
          auto s = sigma_k(oj, m, k, j);
          for (std::uint32_t n = 0; n < oj.c; ++n) {
            Letter y = pk.image(oj.letter(n, m), j);
            REQUIRE(y / oj.c == tk.image(static_cast<Letter>(m), j));
            REQUIRE(s(y % oj.c) == n);
          }
        }
    }
  }
}

TEST_CASE("cocycle identity on random digit splits") {
  std::mt19937_64 rng(2024);
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    const std::uint64_t L = oj.sub.length();
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t total = 2 + rng() % 5;
      if (ipow(L, total) > 5000) total = 2;
      std::uint64_t k1 = 1 + rng() % (total - 1), k2 = total - k1;
      std::uint64_t j1 = rng() % ipow(L, k1), j2 = rng() % ipow(L, k2);
      std::size_t m = rng() % oj.sets();
      auto m_next = image_at(oj.base.tilde, static_cast<Letter>(m), to_digits(j1, L, k1));
      auto lhs = sigma_k(oj, m, total, j1 * ipow(L, k2) + j2);
      auto rhs = sigma_k(oj, m, k1, j1) * sigma_k(oj, m_next, k2, j2);
      REQUIRE(lhs == rhs);
      // and against the expanded power
      auto pk = power(oj.sub, total);
      for (std::uint32_t n = 0; n < oj.c; ++n) REQUIRE(lhs(pk.image(oj.letter(n, m), j1 * ipow(L, k2) + j2) % oj.c) == n);
    }
  }
}

TEST_CASE("group closure") {
  auto bij = group_closure(order_and_rename(load_fixture("bijective_s3")));
  CHECK(bij.elements.size() == 6);
  auto rs = group_closure(order_and_rename(load_fixture("rudin_shapiro")));
  REQUIRE(rs.elements.size() == 2);
  CHECK(rs.elements[0].is_identity());
  CHECK(rs.elements[1].cycles() == "(01)");
  auto trivial = group_closure({Permutation::identity(3)}, 3);
  CHECK(trivial.elements.size() == 1);
}

TEST_CASE("group laws") {
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    auto g = group_closure(oj);
    CHECK(g.elements.size() <= saturating_factorial(oj.c));
    CHECK(g.elements[0].is_identity());
    CHECK(std::is_sorted(g.elements.begin() + 1, g.elements.end()));
    for (std::size_t x = 0; x < g.elements.size(); ++x) {
      for (std::size_t y = 0; y < g.elements.size(); ++y) {
        auto xy = g.find(g.elements[x] * g.elements[y]);
        REQUIRE(xy.has_value());
        CHECK(g.table[x][y] == *xy);
      }
      CHECK((g.elements[x] * g.elements[g.inverse(x)]).is_identity());
    }
    for (std::size_t m = 0; m < oj.sets(); ++m)
      for (std::size_t j = 0; j < oj.sub.length(); ++j) CHECK(g.find(column_permutation(oj, m, j)).has_value());
  }
}

TEST_CASE("group extension of Rudin-Shapiro") {
  Tower t("rudin_shapiro");
  const auto& hat = t.ge.sub;
  CHECK(t.ge.t == 1);
  CHECK(rule_of(hat, "(id,{a,d})") == "(id,{a,d}) (id,{b,c})");
  CHECK(rule_of(hat, "(id,{b,c})") == "(id,{a,d}) ((01),{b,c})");
  CHECK(rule_of(hat, "((01),{a,d})") == "((01),{a,d}) ((01),{b,c})");
  CHECK(rule_of(hat, "((01),{b,c})") == "((01),{a,d}) (id,{b,c})");
  CHECK(column_number(hat) == 2);
  CHECK(t.ge.h_hat == 1);
}

TEST_CASE("group extension of the bijective example") {
  Tower t("bijective_s3");
  const auto& ge = t.ge;
  CHECK(ge.group.elements.size() == 6);
  CHECK(ge.h_hat == 2);
  for (std::size_t g = 0; g < 6; ++g) {
    const auto& s = ge.group.elements[g];
    CHECK(ge.f[g] == (s.sign() < 0 ? 1u : 0u));
    // Theta^(s) = (s)(s (12))(s (021))
    Letter x = ge.letter(g, 0);
    CHECK(ge.group.elements[ge.group_of(ge.sub.image(x, 0))] == s);
    CHECK(ge.group.elements[ge.group_of(ge.sub.image(x, 1))] == s * parse_cycles("(12)", 3));
    CHECK(ge.group.elements[ge.group_of(ge.sub.image(x, 2))] == s * parse_cycles("(021)", 3));
  }
  std::set<std::string> kernel;
  for (auto g : ge.kernel) kernel.insert(ge.group.elements[g].cycles());
  CHECK(kernel == std::set<std::string>{"id", "(012)", "(021)"});
}

TEST_CASE("group extension invariants") {
  for (const auto& name : oracle::primitive_fixtures()) {
    Tower t(name);
    const auto& ge = t.ge;
    const auto& sub = ge.sub;
    const std::size_t G = ge.group.elements.size();
    CHECK(sub.size() == G * ge.sets());
    CHECK(is_primitive(sub).primitive);
    CHECK(column_number(sub) == G);
    CHECK(height(sub).h == ge.h_hat);
    CHECK(ge.tilde == power(t.oj.base.tilde, ge.t));
    CHECK(ge.t == column_permutation(t.oj, t.oj.m0, 0).order());
    for (std::size_t g = 0; g < G; ++g) CHECK(sub.image(ge.letter(g, t.oj.m0), 0) == ge.letter(g, t.oj.m0));
    // rules (g, M)_j = (g sigma_{M,j}, theta~(M)_j), with sigma from the t-th power
    for (std::size_t g = 0; g < G; ++g)
      for (std::size_t m = 0; m < ge.sets(); ++m)
        for (std::size_t j = 0; j < sub.length(); ++j) {
          Letter y = sub.image(ge.letter(g, m), j);
          CHECK(ge.set_of(y) == ge.tilde.image(static_cast<Letter>(m), j));
          CHECK(ge.group.elements[ge.group_of(y)] == ge.group.elements[g] * ge.sigma(m, j));
          CHECK(ge.sigma(m, j) == sigma_k(t.oj, m, ge.t, j));
        }
    // f is a homomorphism onto Z/h_hat with kernel of index h_hat
    std::set<std::uint64_t> values;
    for (std::size_t x = 0; x < G; ++x) {
      values.insert(ge.f[x]);
      for (std::size_t y = 0; y < G; ++y) CHECK(ge.f[ge.group.table[x][y]] == (ge.f[x] + ge.f[y]) % ge.h_hat);
    }
    CHECK(values.size() == ge.h_hat);
    CHECK(ge.kernel.size() * ge.h_hat == G);
    // (k_M, j_M): column j_M of the k_M-th power sends (g, M0) to (g, M)
    REQUIRE(ge.kaem.size() == ge.sets());
    for (std::size_t m = 0; m < ge.sets(); ++m) {
      const auto& [k, digits] = ge.kaem[m];
      CHECK(digits.size() == k);
      for (std::size_t g = 0; g < G; ++g) CHECK(image_at(sub, ge.letter(g, t.oj.m0), digits) == ge.letter(g, m));
    }
  }
}

TEST_CASE("eta of Rudin-Shapiro") {
  Tower t("rudin_shapiro");
  const auto& e = t.e;
  CHECK(e.sub.size() == 4);
  CHECK(rule_of(e.sub, "(id,{a,d},{b,c})") == "(id,{a,d},{b,c}) (id,{b,c},{a,d})");
  CHECK(rule_of(e.sub, "((01),{a,d},{b,c})") == "(id,{a,d},{b,c}) ((01),{b,c},{a,d})");
  CHECK(rule_of(e.sub, "(id,{b,c},{a,d})") == "((01),{a,d},{b,c}) ((01),{b,c},{a,d})");
  CHECK(rule_of(e.sub, "((01),{b,c},{a,d})") == "((01),{a,d},{b,c}) (id,{b,c},{a,d})");
  auto sq = power(e.sub, 2);
  auto first = *e.find({0, 0, 1});
  for (Letter x = 0; x < e.sub.size(); ++x) CHECK(sq.image(x, 0) == first);
  CHECK(column_number(e.sub) == 1);
}

TEST_CASE("eta rules follow the two-case definition") {
  for (const auto& name : oracle::primitive_fixtures()) {
    Tower t(name);
    const auto& ge = t.ge;
    const auto& e = t.e;
    const std::size_t L = ge.length();
    CHECK(column_number(e.sub) == 1);
    CHECK(is_primitive(e.sub).primitive);
    const auto& gr = ge.group;
    for (Letter x = 0; x < e.sub.size(); ++x) {
      auto [g, m, mn] = e.letters[x];
      const auto& s = gr.elements[g];
      for (std::size_t j = 0; j < L; ++j) {
        EtaTriple want;
        if (j + 1 < L) {
          want = {*gr.find(ge.sigma(m, j + 1).inverse() * ge.sigma(m, j)), ge.tilde.image(static_cast<Letter>(m), j),
                  ge.tilde.image(static_cast<Letter>(m), j + 1)};
        } else {
          want = {*gr.find(ge.sigma(mn, 0).inverse() * s * ge.sigma(m, L - 1)), ge.tilde.image(static_cast<Letter>(m), L - 1),
                  ge.tilde.image(static_cast<Letter>(mn), 0)};
        }
        CHECK(e.letters[e.sub.image(x, j)] == want);
      }
    }
  }
}

TEST_CASE("sliding code of the extension fixed point is the eta fixed point") {
  for (const auto& name : oracle::primitive_fixtures()) {
    Tower t(name);
    auto u = prefix(t.ge.fixed_point(), 10000);
    auto code = sliding_code(t.ge, t.e, u);
    REQUIRE(code.size() == 9999);
    auto v = prefix(FixedPointHandle(t.e.sub, 0), 9999);
    bool same = true;
    for (std::size_t i = 0; i < v.size(); ++i) same = same && code[i].has_value() && *code[i] == v[i];
    CHECK_MESSAGE(same, name);
  }
}

TEST_CASE("v_tau") {
  Tower t("rudin_shapiro");
  const auto& ge = t.ge;
  auto u = prefix(ge.fixed_point(), 4096);
  CHECK(v_tau(ge, u, Permutation::identity(2)) == u);
  auto tau = parse_cycles("(01)", 2);
  auto v = v_tau(ge, u, tau);
  // v is the fixed point grown from ((01), M0)
  CHECK(v == prefix(FixedPointHandle(ge.sub, ge.letter(1, t.oj.m0)), 4096));
  CHECK(ge.sub.apply(std::span(v).first(2048)) == v);
  auto cu = sliding_code(ge, t.e, u), cv = sliding_code(ge, t.e, v);
  CHECK(cu == cv);
  // a different M-skeleton gives a different code
  auto shifted = std::span(u).subspan(1);
  CHECK(sliding_code(ge, t.e, shifted) != std::vector<std::optional<Letter>>(cu.begin(), cu.end() - 1));
  CHECK(code_of([&] { v_tau(ge, u, Permutation::identity(3)); }) == ErrorCode::NotInGroup);

  Tower b("bijective_s3");
  auto w = prefix(b.ge.fixed_point(), 100);
  for (const auto& x : b.ge.group.elements)
    for (const auto& y : b.ge.group.elements) CHECK(v_tau(b.ge, v_tau(b.ge, w, y), x) == v_tau(b.ge, w, x * y));
}

TEST_CASE("eta_h") {
  Tower rs("rudin_shapiro");
  auto e1 = eta_h(rs.ge, rs.e);
  CHECK(e1.h == 1);
  CHECK(e1.sub == rs.e.sub);

  for (const char* name : {"bijective_s3", "height_two"}) {
    Tower t(name);
    auto eh = eta_h(t.ge, t.e);
    CHECK(eh.h == 2);
    CHECK(column_number(eh.sub) == 2);
    CHECK(height(eh.sub).h == 2);
    CHECK(column_number(eh.periodic) == 2);
    CHECK(height(eh.periodic).h == 2);
    for (Letter i = 0; i < eh.periodic.size(); ++i)
      for (std::size_t j = 0; j < eh.periodic.length(); ++j)
        CHECK(eh.periodic.image(i, j) == (t.ge.length() * i + j) % 2);
    CHECK_NOTHROW(join_bounds_check(t.e.sub, eh.periodic, eh.sub));
  }
}

TEST_CASE("tower identities on every primitive fixture") {
  for (const auto& name : oracle::primitive_fixtures()) {
    Tower t(name);
    auto eh = eta_h(t.ge, t.e);
    CHECK(column_number(eh.sub) == t.ge.h_hat);
    CHECK(height(eh.sub).h == t.ge.h_hat);
    CHECK_NOTHROW(join_bounds_check(t.oj.base.theta, t.oj.base.tilde, t.oj.base.joined));
    if (t.ge.h_hat > 1) CHECK_NOTHROW(join_bounds_check(t.e.sub, eh.periodic, eh.sub));
  }
}

TEST_CASE("permutation laws on random permutations") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<std::uint32_t> a(n), b(n);
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation p(a), q(b);
    for (std::uint32_t x = 0; x < n; ++x) CHECK((p * q)(x) == p(q(x)));
    CHECK((p * p.inverse()).is_identity());
    CHECK(parse_cycles(p.cycles(), n) == p);
    CHECK(power(p, p.order()).is_identity());
    for (std::uint64_t k = 1; k < p.order(); ++k) CHECK_FALSE(power(p, k).is_identity());
    CHECK((p * q).sign() == p.sign() * q.sign());
    // sign from the inversion count
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += a[i] > a[j];
    CHECK(p.sign() == (inversions % 2 ? -1 : 1));
  }
  CHECK(Permutation::identity(3).cycles() == "id");
  CHECK(parse_cycles("(01)(23)", 4).cycles() == "(01)(23)");
  CHECK(parse_cycles("(021)", 3)(0) == 2);
  CHECK(saturating_factorial(5) == 120);
  CHECK(saturating_factorial(100) == std::numeric_limits<std::uint64_t>::max());
}
