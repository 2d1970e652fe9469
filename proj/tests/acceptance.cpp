// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented below.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "substkit/arith.hpp"
#include "substkit/correlation.hpp"
#include "substkit/error.hpp"
#include "substkit/fixtures.hpp"
#include "substkit/joinings.hpp"
#include "substkit/observable.hpp"
#include "substkit/structure.hpp"

using namespace substkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Criterion {
  struct Line {
    bool ok;
    std::string name, detail;
  };
  std::vector<Line> lines;

  bool check(const std::string& name, bool ok, const std::string& detail = {}) {
    lines.push_back({ok, name, detail});
    return ok;
  }
  bool passed() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return !lines.empty();
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.check("unexpected error", false, std::string(e.name()) + ": " + e.what());
  }
  const bool ok = c.passed();
  failures += !ok;
  std::printf("%s  [%d] %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0));
  for (const auto& l : c.lines)
    std::printf("        %s %s%s%s\n", l.ok ? "ok  " : "FAIL", l.name.c_str(), l.detail.empty() ? "" : ": ",
                l.detail.c_str());
  std::fflush(stdout);
}

std::string rule_of(const Substitution& s, const std::string& name) {
  auto a = s.alphabet().find(name);
  if (!a) return "<missing " + name + ">";
  std::string out;
  for (auto x : s.rule(*a)) out += s.alphabet().name(x) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

std::vector<std::string> set_names(const Substitution& sub, const std::vector<LetterSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(set_name(sub.alphabet(), s));
  return out;
}

// --- 1 -----------------------------------------------------------------------

void worked_examples(Criterion& c) {
  auto timed = [&](const std::string& name, const std::function<bool(std::string&)>& fn) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = fn(detail);
    const double dt = seconds_since(t0);
    c.check(name, ok && dt < 1.0, detail + fmt("%s%.3fs", detail.empty() ? "" : ", ", dt));
  };

  timed("Baum-Sweet", [](std::string& d) {
    auto bs = load_fixture("baum_sweet");
    auto p3 = power(bs, 3);
    std::set<std::string> col;
    for (Letter a = 0; a < bs.size(); ++a) col.insert(bs.alphabet().name(p3.image(a, 5)));
    const auto cn = column_number(bs);
    d = fmt("c=%zu, column 5 of the cube = {", cn);
    for (const auto& x : col) d += x;
    d += "}";
    return cn == 1 && col == std::set<std::string>{"d"};
  });

  timed("three-letter example", [](std::string& d) {
    auto s = load_fixture("three_letter_cover");
    auto prim = is_primitive(s);
    auto fam = sync_family(s);
    auto tilde = synchronizing_part(s, fam);
    const auto h = height(s).h;
    const auto names = set_names(s, fam.sets);
    d = fmt("witness %llu, c=%zu, h=%llu", (unsigned long long)prim.witness, fam.c, (unsigned long long)h);
    // letters of tilde are the sets in family order: 0 = {a,b}, 1 = {a,c}
    return prim.primitive && prim.witness <= 3 && fam.c == 2 && h == 1 &&
           names == std::vector<std::string>{"{a,b}", "{a,c}"} && !fam.partition && tilde.flat() == Word{1, 0, 0, 0};
  });

  timed("Rudin-Shapiro", [](std::string& d) {
    auto s = load_fixture("rudin_shapiro");
    auto fam = sync_family(s);
    auto cl = classify(s);
    auto oj = order_and_rename(s);
    auto ge = group_extension(oj);
    auto e = eta(ge);
    const auto& tilde = oj.base.tilde;
    bool ok = set_names(s, fam.sets) == std::vector<std::string>{"{a,d}", "{b,c}"};
    ok = ok && tilde.flat() == Word{0, 1, 0, 1};
    ok = ok && cl.quasi_bijective && !cl.bijective;
    // Theta, Theta~ as displayed; the canonical order coincides with the displayed one
    const auto& J = oj.base.joined;
    ok = ok && rule_of(J, "(a,{a,d})") == "(a,{a,d}) (b,{b,c})" && rule_of(J, "(d,{a,d})") == "(d,{a,d}) (c,{b,c})" &&
         rule_of(J, "(b,{b,c})") == "(a,{a,d}) (c,{b,c})" && rule_of(J, "(c,{b,c})") == "(d,{a,d}) (b,{b,c})";
    const auto& T = oj.sub;
    ok = ok && rule_of(T, "(0,{a,d})") == "(0,{a,d}) (0,{b,c})" && rule_of(T, "(1,{a,d})") == "(1,{a,d}) (1,{b,c})" &&
         rule_of(T, "(0,{b,c})") == "(0,{a,d}) (1,{b,c})" && rule_of(T, "(1,{b,c})") == "(1,{a,d}) (0,{b,c})";
    std::vector<std::string> group;
    for (const auto& g : ge.group.elements) group.push_back(g.cycles());
    ok = ok && group == std::vector<std::string>{"id", "(01)"};
    // Theta^(s, M0) = (s, M0)(s, M1), Theta^(s, M1) = (s, M0)(s (01), M1)
    const auto& H = ge.sub;
    for (std::string g : {"id", "(01)"}) {
      const std::string g01 = g == "id" ? "(01)" : "id";
      ok = ok && rule_of(H, "(" + g + ",{a,d})") == "(" + g + ",{a,d}) (" + g + ",{b,c})";
      ok = ok && rule_of(H, "(" + g + ",{b,c})") == "(" + g + ",{a,d}) (" + g01 + ",{b,c})";
    }
    // eta(s, M0, M1) = (id, M0, M1)(s, M1, M0), eta(s, M1, M0) = ((01), M0, M1)(s (01), M1, M0)
    for (std::string g : {"id", "(01)"}) {
      const std::string g01 = g == "id" ? "(01)" : "id";
      ok = ok && rule_of(e.sub, "(" + g + ",{a,d},{b,c})") == "(id,{a,d},{b,c}) (" + g + ",{b,c},{a,d})";
      ok = ok && rule_of(e.sub, "(" + g + ",{b,c},{a,d})") == "((01),{a,d},{b,c}) (" + g01 + ",{b,c},{a,d})";
    }
    auto sq = power(e.sub, 2);
    const auto first = e.find({0, 0, 1});
    bool constant = first.has_value();
    for (Letter x = 0; x < e.sub.size() && constant; ++x) constant = sq.image(x, 0) == *first;
    const auto ce = column_number(e.sub);
    d = fmt("|G|=%zu, |B|=%zu, c(eta)=%zu", ge.group.elements.size(), e.sub.size(), ce);
    return ok && e.sub.size() == 4 && constant && ce == 1;
  });

  timed("adda example", [](std::string& d) {
    auto s = load_fixture("adda_bccb");
    auto fam = sync_family(s);
    auto tilde = synchronizing_part(s, fam);
    const auto h = height(s).h;
    d = fmt("h=%llu, c=%zu", (unsigned long long)h, fam.c);
    return h == 1 && fam.c == 2 && tilde.flat() == Word{0, 1, 1, 0, 0, 0, 0, 1};
  });

  timed("height-two example", [](std::string& d) {
    auto s = load_fixture("height_two");
    auto cl = classify(s);
    d = fmt("c=%zu, h=%llu", cl.c, (unsigned long long)cl.h);
    return is_primitive(s).primitive && cl.c == 2 && cl.h == 2 && cl.synchronizing_case;
  });

  timed("bijective example", [](std::string& d) {
    auto s = load_fixture("bijective_s3");
    auto cl = classify(s);
    auto oj = order_and_rename(s);
    auto ge = group_extension(oj);
    bool ok = cl.bijective && cl.c == 3 && ge.group.elements.size() == 6;
    ok = ok && column_permutation(oj, 0, 2).cycles() == "(021)";
    std::set<std::string> kernel;
    for (auto g : ge.kernel) kernel.insert(ge.group.elements[g].cycles());
    for (std::size_t g = 0; g < ge.group.elements.size(); ++g)
      ok = ok && ge.f[g] == (ge.group.elements[g].sign() < 0 ? 1u : 0u);
    d = fmt("c=%zu, |G|=%zu, h_hat=%llu", cl.c, ge.group.elements.size(), (unsigned long long)ge.h_hat);
    return ok && ge.h_hat == 2 && kernel == std::set<std::string>{"id", "(012)", "(021)"};
  });
}

// --- 2 -----------------------------------------------------------------------

void identity_suite(Criterion& c) {
  std::mt19937_64 rng(7);
  for (const auto& name : oracle::primitive_fixtures()) {
    auto sub = load_fixture(name);
    bool ok = true;
    std::string what;
    auto need = [&](bool cond, const char* label) {
      if (!cond) what += std::string(what.empty() ? "" : ", ") + label;
      ok = ok && cond;
    };
    const auto ch = check_ch_identity(sub);
    need(ch.c == ch.h * ch.c_pure_base, "c = h c(pure base)");
    auto oj = order_and_rename(sub);
    const auto& sj = oj.base;
    need(column_number(sj.joined) == ch.c, "c(Theta)");
    need(height(sj.joined).h == ch.h, "h(Theta)");
    auto tilde = synchronizing_part(sub);
    need(column_number(tilde) == 1 && height(tilde).h == 1 && is_primitive(tilde).primitive, "theta~");
    auto ge = group_extension(oj);
    const auto G = ge.group.elements.size();
    need(is_primitive(ge.sub).primitive && column_number(ge.sub) == G, "Theta^");
    // cocycle identity on sampled splits
    const std::uint64_t L = oj.sub.length();
    for (int trial = 0; trial < 100; ++trial) {
      std::uint64_t total = 2 + rng() % 4;
      if (ipow(L, total) > 5000) total = 2;
      const std::uint64_t k1 = 1 + rng() % (total - 1), k2 = total - k1;
      const std::uint64_t j1 = rng() % ipow(L, k1), j2 = rng() % ipow(L, k2);
      const std::size_t m = rng() % oj.sets();
      const auto next = image_at(sj.tilde, static_cast<Letter>(m), to_digits(j1, L, k1));
      if (sigma_k(oj, m, total, j1 * ipow(L, k2) + j2) != sigma_k(oj, m, k1, j1) * sigma_k(oj, next, k2, j2)) {
        need(false, "cocycle");
        break;
      }
    }
    // synchronizing columns: Theta~^k0 at j0 lands in M0 with trivial sigma,
    // and column j_M of Theta^^k_M sends (g, M0) to (g, M)
    for (std::size_t m = 0; m < oj.sets(); ++m) {
      bool col = sigma_k(oj, m, oj.j0).is_identity();
      for (std::size_t i = 0; i < oj.c; ++i) col = col && image_at(oj.sub, oj.letter(i, m), oj.j0) == oj.letter(i, oj.m0);
      need(col, "Theta~ synchronizing column");
      const auto& [k, digits] = ge.kaem[m];
      bool hat = digits.size() == k;
      for (std::size_t g = 0; g < G && hat; ++g) hat = image_at(ge.sub, ge.letter(g, oj.m0), digits) == ge.letter(g, m);
      need(hat, "Theta^ synchronizing column");
    }
    auto e = eta(ge);
    need(column_number(e.sub) == 1, "c(eta)");
    auto eh = eta_h(ge, e);
    need(column_number(eh.sub) == ge.h_hat && height(eh.sub).h == ge.h_hat, "c(eta_h) = h(eta_h) = h_hat");
    try {
      join_bounds_check(sj.theta, sj.tilde, sj.joined);
      if (ge.h_hat > 1) join_bounds_check(e.sub, eh.periodic, eh.sub);
    } catch (const Error& err) {
      need(false, "join bounds");
    }
    c.check(name, ok, what.empty() ? fmt("c=%zu h=%llu |G|=%zu h_hat=%llu", ch.c, (unsigned long long)ch.h, G,
                                         (unsigned long long)ge.h_hat)
                                   : "violated: " + what);
  }
  c.check("baum_sweet", true, "not primitive; identities not applicable (sync family raises NotPrimitive)");
}

// --- 3 -----------------------------------------------------------------------

void oracle_suite(Criterion& c) {
  for (const auto& name : oracle::fixture_names()) {
    auto sub = load_fixture(name);
    auto handle = find_fixed_seed(sub);
    auto raw = oracle::raw_from(handle.base());
    auto u = oracle::fixed_prefix(raw, handle.base().alphabet().name(handle.seed()), 100000);
    bool same = true;
    for (std::uint64_t n = 0; n < 100000 && same; ++n)
      same = handle.base().alphabet().name(handle.letter_at(n)) == u[n];
    c.check("letter_at " + name, same, "n < 1e5");
  }

  auto mu = moebius_sieve(10000), lam = liouville_sieve(10000);
  bool sieve = true;
  for (std::uint64_t n = 1; n <= 10000; ++n) sieve = sieve && mu[n] == oracle::mu(n) && lam[n] == oracle::liouville(n);
  // characters: chi(n) equals the product of chi over the trial factorization
  // of n, and depends on n mod q only
  bool chars = true;
  std::vector<std::vector<std::uint64_t>> factors(10001);
  for (std::uint64_t n = 1; n <= 10000; ++n) factors[n] = oracle::trial_factor(n);
  for (std::uint64_t q = 1; q <= 100 && chars; ++q)
    for (std::uint64_t i = 0; i < character_count(q) && chars; ++i) {
      auto chi = ArithmeticFunction::dirichlet(q, i);
      for (std::uint64_t n = 1; n <= 10000 && chars; ++n) {
        Complex product(1, 0);
        for (auto p : factors[n]) product *= chi(p);
        chars = std::abs(chi(n) - product) < 1e-9 && chi(n) == chi(n % q + q);
      }
    }
  c.check("sieves vs trial factorization", sieve, "mu and lambda, n <= 1e4");
  c.check("characters", chars, "q <= 100, n <= 1e4");

  bool sig = true;
  for (const auto& name : oracle::primitive_fixtures()) {
    auto oj = order_and_rename(load_fixture(name));
    const std::uint64_t L = oj.sub.length();
    for (std::uint64_t k = 1; k <= 3; ++k) {
      auto pk = power(oj.sub, k);
      for (std::size_t m = 0; m < oj.sets(); ++m)
        for (std::uint64_t j = 0; j < ipow(L, k); ++j) {
          auto s = sigma_k(oj, m, k, j);
          for (std::uint32_t n = 0; n < oj.c; ++n) sig = sig && s(pk.image(oj.letter(n, m), j) % oj.c) == n;
        }
    }
  }
  c.check("sigma_k vs power columns", sig, "k <= 3, all primitive fixtures");

  for (const auto& name : oracle::primitive_fixtures()) {
    auto ge = group_extension(order_and_rename(load_fixture(name)));
    auto e = eta(ge);
    auto u = prefix(ge.fixed_point(), 10001);
    auto code = sliding_code(ge, e, u);
    auto v = prefix(FixedPointHandle(e.sub, 0), 10000);
    bool same = code.size() == 10000;
    for (std::size_t i = 0; i < v.size() && same; ++i) same = code[i].has_value() && *code[i] == v[i];
    c.check("g-code vs eta " + name, same, "length 1e4");
  }
}

// --- 4 -----------------------------------------------------------------------

void orthogonality(Criterion& c) {
  const std::uint64_t N = 10'000'000;
  const std::vector<std::uint64_t> cps{10'000, 100'000, 1'000'000, 10'000'000};
  const auto mu = ArithmeticFunction::moebius(N);
  const auto li = ArithmeticFunction::liouville(N);
  struct Pair {
    const char* fixture;
    const char* observable;
  };
  for (auto [fx, obs] : {Pair{"rudin_shapiro", "code1:a=1,b=1,c=-1,d=-1"}, Pair{"bijective_s3", "code1:a=1,b=-1"},
                         Pair{"thue_morse", "code1:0=1,1=-1"}, Pair{"baum_sweet", "code1:a=1,b=1,c=-1,d=-1"}}) {
    auto sub = load_fixture(fx);
    auto handle = find_fixed_seed(sub);
    auto f = Observable::parse(obs, sub.alphabet()).centered(handle);
    for (const auto* fn : {&mu, &li}) {
      const auto t0 = Clock::now();
      auto rep = correlate(handle, f, *fn, N, cps, 1);
      const double dt = seconds_since(t0);
      const double first = std::abs(rep.partial_means.front()), last = std::abs(rep.partial_means.back());
      c.check(std::string(fx) + " x " + fn->label(), last < 0.01 && last < first && dt < 60,
              fmt("|mean| %.2e at 1e4, %.2e at 1e7, %.1fs, mean from %s", first, last, dt, f.mean_source().c_str()));
    }
  }
  auto h2 = load_fixture("height_two");
  auto handle = find_fixed_seed(h2);
  auto col = height(handle);
  std::map<Letter, Complex> values;
  for (Letter a = 0; a < h2.size(); ++a) values[a] = col.coloring[a] ? -1.0 : 1.0;
  auto f = Observable::one_code(h2.alphabet(), values);
  auto rep = correlate(handle, f, ArithmeticFunction::alternating_unit(), N, cps, 1);
  bool ok = true;
  for (std::size_t i = 0; i < cps.size(); ++i)
    ok = ok && std::abs(rep.partial_means[i] - Complex(-1, 0)) <= 2.0 / double(cps[i]);
  c.check("negative control: height coloring x alt1", ok,
          fmt("mean %.12f at N=1e7", rep.partial_means.back().real()));
}

// --- 5 -----------------------------------------------------------------------

void kbsz(Criterion& c) {
  auto rs = load_fixture("rudin_shapiro");
  auto handle = find_fixed_seed(rs);
  auto f = Observable::parse("code1:a=1,b=1,c=-1,d=-1", rs.alphabet()).centered(handle);
  auto rep = kbsz_cross(handle, f, 31, 37, 1'000'000, parse_checkpoints("log10", 1'000'000), 1);
  const double v = std::abs(rep.partial_means.back());
  c.check("Rudin-Shapiro (31, 37), N=1e6", v < 0.02, fmt("|cross mean| = %.3e", v));
}

// --- 6 -----------------------------------------------------------------------

void wrap(Criterion& c) {
  auto bs = load_fixture("baum_sweet");
  auto w = wrap_profile(bs, 8);
  bool monotone = true;
  for (std::size_t k = 1; k < w.ratios.size(); ++k) monotone = monotone && w.ratios[k] >= w.ratios[k - 1];
  std::string list;
  for (auto r : w.ratios) list += fmt("%s%.4f", list.empty() ? "" : " ", r);
  c.check("ratios non-decreasing", monotone, list);
  c.check("l_8 / 2^8 >= 0.9", w.ratios[7] >= 0.9,
          fmt("l_8 = %llu, ratio %.4f", (unsigned long long)w.singletons[7], w.ratios[7]));

  auto handle = find_fixed_seed(bs);
  auto u = prefix(handle, 64);
  auto v = periodic_approximant(handle, 16, 64);
  const double d = dW_estimate(u, v, 16);
  const double bound = 1.0 - w.ratios[3];
  c.check("dW vs 1 - l_4/2^4", d <= bound + 0.02, fmt("dW = %.4f, 1 - l_4/16 = %.4f (window 16, length 64)", d, bound));
}

// --- 7 -----------------------------------------------------------------------

void momo(Criterion& c) {
  const std::uint64_t N = 10'000'000;
  auto rs = load_fixture("rudin_shapiro");
  auto handle = find_fixed_seed(rs);
  const auto blocks = parse_blocks("k2");
  auto m = momo_short_intervals(handle, std::nullopt, ArithmeticFunction::moebius(N), blocks, N, 1);
  c.check("moebius, b_k = k^2", m.value < 0.05,
          fmt("value %.4f, K = %llu, b_K = %llu", m.value, (unsigned long long)m.blocks,
              (unsigned long long)m.last_boundary));
  auto one = momo_short_intervals(handle, std::nullopt, ArithmeticFunction::parse("const1", N), blocks, N, 1);
  c.check("constant 1", one.value == 1.0, fmt("value %.17g", one.value));
}

// --- 8 -----------------------------------------------------------------------

bool same_bits(const CorrelationReport& a, const CorrelationReport& b) {
  if (a.partial_means.size() != b.partial_means.size()) return false;
  return std::memcmp(a.partial_means.data(), b.partial_means.data(), a.partial_means.size() * sizeof(Complex)) == 0;
}

void determinism(Criterion& c) {
  const std::uint64_t N = 10'000'000;
  const auto cps = parse_checkpoints("log10", N);
  const auto mu = ArithmeticFunction::moebius(N, 8);
  for (auto [fx, obs] : {std::pair{"rudin_shapiro", "code1:a=1,b=1,c=-1,d=-1"},
                         std::pair{"bijective_s3", "code1:a=1,b=-1,c=0.5i"}}) {
    auto sub = load_fixture(fx);
    auto handle = find_fixed_seed(sub);
    auto f = Observable::parse(obs, sub.alphabet()).centered(handle);
    c.check(std::string("correlate ") + fx, same_bits(correlate(handle, f, mu, N, cps, 1), correlate(handle, f, mu, N, cps, 8)),
            "workers 1 and 8");
    const auto kc = parse_checkpoints("log10", 1'000'000);
    c.check(std::string("kbsz ") + fx,
            same_bits(kbsz_cross(handle, f, 31, 37, 1'000'000, kc, 1), kbsz_cross(handle, f, 31, 37, 1'000'000, kc, 8)),
            "workers 1 and 8");
  }
}

}  // namespace

int main() {
  criterion(1, "worked examples", worked_examples);
  criterion(2, "theorem identities", identity_suite);
  criterion(3, "oracle equivalence", oracle_suite);
  criterion(4, "orthogonality at N = 1e7", orthogonality);
  criterion(5, "KBSZ decay", kbsz);
  criterion(6, "wrap profile and dW", wrap);
  criterion(7, "MOMO estimator", momo);
  criterion(8, "determinism across worker counts", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
