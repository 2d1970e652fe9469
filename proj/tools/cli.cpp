#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <new>
#include <optional>

#include "CLI11.hpp"
#include "report.hpp"
#include "substkit/arith.hpp"
#include "substkit/correlation.hpp"
#include "substkit/error.hpp"
#include "substkit/fixtures.hpp"
#include "substkit/joinings.hpp"
#include "substkit/observable.hpp"
#include "substkit/structure.hpp"
#include "substkit/substitution_io.hpp"

namespace substkit::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::string_view kFixturePrefix = "fixture:";

/// A bad flag value found after argument parsing; exits like a CLI11 error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string input;
  bool json = false;
  int workers = 1;
  std::string memory_limit;
  bool timing = false;

  std::size_t k_max = 8;
  std::size_t dw_power = 4;
  std::uint64_t length = 64;
  std::uint64_t from = 0;
  std::string emit_dir;
  std::string write_dir;

  std::string mult = "moebius";
  std::string n_text = "1e6";
  std::string observable;
  std::string checkpoints = "log10";
  bool mean_zero = false;
  std::string csv_path, svg_path;
  std::uint64_t p = 31, q = 37;
  std::string blocks = "k2";
};

template <class F>
auto usage_checked(F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(std::string(e.name()) + ": " + e.what());
  }
}

Limits limits_of(const Config& cfg) {
  Limits limits;
  if (!cfg.memory_limit.empty()) {
    const auto cap = usage_checked([&] { return parse_count(cfg.memory_limit); });
    if (cap == 0) throw UsageError("--memory-limit must be positive");
    limits.table_limit = cap;
    limits.word_limit = std::min(limits.word_limit, cap);
  }
  return limits;
}

Substitution load_input(const std::string& input) {
  if (input.starts_with(kFixturePrefix)) return load_fixture(input.substr(kFixturePrefix.size()));
  return load_substitution(input);
}

bool single_char_names(const Alphabet& alphabet) {
  return std::all_of(alphabet.names().begin(), alphabet.names().end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Report rules_of(const Substitution& sub) {
  return sub.rule_strings(single_char_names(sub.alphabet()) ? "" : " ");
}

std::string word_text(const Alphabet& alphabet, std::span<const Letter> w) {
  const std::string sep = single_char_names(alphabet) ? "" : " ";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? sep : "") + alphabet.name(w[i]);
  return out;
}

Report sets_of(const Alphabet& alphabet, const std::vector<LetterSet>& sets) {
  Report out = Report::array();
  for (const auto& s : sets) out.push_back(set_name(alphabet, s));
  return out;
}

/// Runs one section of a report; a data error is recorded in place of the
/// section so the remaining sections still print.
void section(Report& r, const std::string& key, const std::function<Report()>& body) {
  try {
    r[key] = body();
  } catch (const Error& e) {
    if (is_bug_signal(e.code())) throw;
    r[key] = Report{{"error", std::string(e.name())}, {"message", e.what()}};
  }
}

Report sync_family_report(const Substitution& sub, const SyncFamily& fam) {
  Report r;
  r["c"] = fam.c;
  r["witness_k"] = fam.witness_k;
  r["partition"] = fam.partition;
  Report sets = Report::array();
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    Report s;
    s["index"] = i;
    s["set"] = set_name(sub.alphabet(), fam.sets[i]);
    s["column_digits"] = fam.witness[i];
    sets.push_back(s);
  }
  r["sets"] = sets;
  return r;
}

Report height_report(const Substitution& sub, const HeightResult& h) {
  Report r;
  r["h"] = h.h;
  r["observed_gcd"] = h.observed_gcd;
  r["certified"] = h.certified;
  r["prefix_length"] = h.prefix_length;
  Report coloring = Report::object();
  for (Letter a = 0; a < sub.size(); ++a) coloring[sub.alphabet().name(a)] = h.coloring[a];
  r["coloring"] = coloring;
  return r;
}

Report analyze(const Config& cfg, const Substitution& sub, const Limits& limits) {
  Report r;
  r["command"] = "analyze";
  r["input"] = cfg.input;
  r["lambda"] = sub.length();
  r["alphabet_size"] = sub.size();
  r["alphabet"] = sub.alphabet().names();
  r["rules"] = rules_of(sub);
  const auto prim = is_primitive(sub);
  r["primitive"] = Report{{"value", prim.primitive}, {"witness", prim.primitive ? Report(prim.witness) : Report()}};
  const auto trace = column_trace(sub);
  r["column_number"] = column_number(trace);
  r["column_trace"] = Report{{"preperiod", trace.preperiod}, {"period", trace.period}};
  section(r, "height", [&] { return height_report(sub, height(sub, limits)); });
  section(r, "pure_base", [&] {
    const auto pb = pure_base(sub, limits);
    Report p;
    p["h"] = pb.h;
    p["column_number"] = column_number(pb.sub);
    Report blocks = Report::array();
    for (const auto& b : pb.blocks) blocks.push_back(word_text(sub.alphabet(), b));
    p["blocks"] = blocks;
    return p;
  });
  section(r, "classification", [&] {
    const auto cl = classify(sub, limits);
    return Report{{"bijective", cl.bijective},
                  {"quasi_bijective", cl.quasi_bijective},
                  {"synchronizing_case", cl.synchronizing_case}};
  });
  section(r, "sync_family", [&] { return sync_family_report(sub, sync_family(sub, trace)); });
  section(r, "tilde_rules", [&] { return rules_of(synchronizing_part(sub)); });
  return r;
}

Report fixpoint(const Config& cfg, const Substitution& sub, const Limits& limits) {
  if (cfg.length > limits.table_limit) fail(ErrorCode::Overflow, "requested length exceeds the memory limit");
  const auto handle = find_fixed_seed(sub, limits);
  Word w(cfg.length);
  for (std::uint64_t i = 0; i < cfg.length; ++i) w[i] = handle.letter_at(cfg.from + i);
  Report r;
  r["command"] = "fixpoint";
  r["input"] = cfg.input;
  r["seed"] = sub.alphabet().name(handle.seed());
  r["power_taken"] = handle.power_taken();
  r["from"] = cfg.from;
  r["length"] = cfg.length;
  r["letters"] = word_text(sub.alphabet(), w);
  return r;
}

Report sync(const Config& cfg, const Substitution& sub, const Limits& limits) {
  const auto fam = sync_family(sub);
  const auto tilde = synchronizing_part(sub, fam);
  Report r;
  r["command"] = "sync";
  r["input"] = cfg.input;
  r["family"] = sync_family_report(sub, fam);
  r["tilde_rules"] = rules_of(tilde);
  r["tilde"] = Report{{"primitive", is_primitive(tilde).primitive},
                      {"column_number", column_number(tilde)},
                      {"height", height(tilde, limits).h}};
  return r;
}

Report group_report(const GroupExtension& ge) {
  Report r;
  r["order"] = ge.group.elements.size();
  Report elements = Report::array(), generators = Report::array();
  for (const auto& g : ge.group.elements) elements.push_back(g.cycles());
  for (const auto& g : ge.group.generators) generators.push_back(g.cycles());
  r["elements"] = elements;
  r["generators"] = generators;
  return r;
}

int tower(const Config& cfg, const Substitution& sub, const Limits& limits, Report& r) {
  const auto sj = theta_sync_join(sub, limits);
  const auto oj = order_and_rename(sj);
  const auto ge = group_extension(oj, limits);
  const auto e = eta(ge);
  const auto eh = eta_h(ge, e, limits);
  const auto tilde = synchronizing_part(sub, sj.family);

  r["command"] = "tower";
  r["input"] = cfg.input;
  r["theta"] = Report{{"power_taken", sj.power_taken}, {"rules", rules_of(sj.theta)}};
  r["tilde"] = Report{{"sets", sets_of(sub.alphabet(), sj.family.sets)}, {"rules", rules_of(tilde)}};
  r["Theta"] = Report{{"letters", sj.joined.alphabet().names()}, {"seed", sj.joined.alphabet().name(sj.seed)},
                      {"rules", rules_of(sj.joined)}};
  Report order = Report::array();
  for (const auto& o : oj.order) order.push_back(word_text(sub.alphabet(), o));
  r["Theta_tilde"] = Report{{"c", oj.c},     {"m0", oj.m0},       {"a0", sub.alphabet().name(oj.a0)},
                            {"k0", oj.k0},   {"j0", oj.j0},       {"order", order},
                            {"rules", rules_of(oj.sub)}};
  r["group"] = group_report(ge);
  Report f = Report::object();
  for (std::size_t g = 0; g < ge.group.elements.size(); ++g) f[ge.group.elements[g].cycles()] = ge.f[g];
  Report kernel = Report::array();
  for (auto g : ge.kernel) kernel.push_back(ge.group.elements[g].cycles());
  r["Theta_hat"] = Report{{"t", ge.t}, {"h_hat", ge.h_hat}, {"f", f}, {"G0", kernel}, {"rules", rules_of(ge.sub)}};
  r["eta"] = Report{{"letters", e.sub.size()}, {"rules", rules_of(e.sub)}};
  r["eta_h"] = Report{{"h", eh.h}, {"letters", eh.sub.size()}, {"rules", rules_of(eh.sub)}};

  const auto c = column_number(sub);
  const auto h = height(sub, limits).h;
  const auto c_hat = column_number(ge.sub);
  const auto c_eh = column_number(eh.sub);
  Report checks;
  checks["ch_identity"] = (check_ch_identity(sub, limits), true);
  checks["c_Theta_equals_c"] = column_number(sj.joined) == c;
  checks["h_Theta_equals_h"] = height(sj.joined, limits).h == h;
  checks["tilde_primitive"] = is_primitive(tilde).primitive;
  checks["tilde_c_is_1"] = column_number(tilde) == 1;
  checks["tilde_h_is_1"] = height(tilde, limits).h == 1;
  checks["Theta_hat_primitive"] = is_primitive(ge.sub).primitive;
  checks["Theta_hat_c_equals_G"] = c_hat == ge.group.elements.size();
  checks["eta_c_is_1"] = column_number(e.sub) == 1;
  checks["eta_h_c_equals_h_hat"] = c_eh == ge.h_hat;
  checks["eta_h_h_equals_h_hat"] = height(eh.sub, limits).h == ge.h_hat;
  checks["join_bounds_Theta"] = (join_bounds_check(sj.theta, sj.tilde, sj.joined, limits), true);
  if (ge.h_hat > 1) checks["join_bounds_eta_h"] = (join_bounds_check(e.sub, eh.periodic, eh.sub, limits), true);
  r["checks"] = checks;

  if (!cfg.emit_dir.empty()) {
    fs::create_directories(cfg.emit_dir);
    const std::vector<std::pair<std::string, const Substitution*>> stages{
        {"theta_power", &sj.theta}, {"tilde", &tilde},    {"Theta", &sj.joined}, {"Theta_tilde", &oj.sub},
        {"Theta_hat", &ge.sub},     {"eta", &e.sub},      {"eta_h", &eh.sub}};
    Report written = Report::array();
    for (const auto& [name, s] : stages) {
      const auto path = fs::path(cfg.emit_dir) / (name + ".json");
      save_substitution(*s, path);
      written.push_back(path.string());
    }
    r["emitted"] = written;
  }

  std::string failed;
  for (const auto& [name, ok] : checks.items())
    if (!ok.get<bool>()) failed += (failed.empty() ? "" : ", ") + name;
  if (!failed.empty()) throw Error(ErrorCode::IdentityViolation, "tower checks failed: " + failed);
  return 0;
}

Report wrap(const Config& cfg, const Substitution& sub, const Limits& limits) {
  const auto profile = wrap_profile(sub, cfg.k_max);
  Report r;
  r["command"] = "wrap";
  r["input"] = cfg.input;
  r["k_max"] = cfg.k_max;
  r["singletons"] = profile.singletons;
  r["ratios"] = profile.ratios;
  r["warning"] = profile.warning;
  const auto k = std::min(cfg.dw_power, cfg.k_max);
  if (k > 0) {
    section(r, "dW", [&] {
      const auto period = checked_power(sub.length(), k, limits.table_limit);
      const auto length = checked_power(sub.length(), k + 2, limits.table_limit);
      if (!period || !length) fail(ErrorCode::Overflow, "approximant longer than the memory limit");
      const auto handle = find_fixed_seed(sub, limits);
      const auto u = prefix(handle, *length, limits);
      const auto v = periodic_approximant(handle, *period, *length, limits);
      Report d;
      d["power"] = k;
      d["period"] = *period;
      d["window"] = *period;
      d["length"] = *length;
      d["estimate"] = dW_estimate(u, v, *period);
      d["one_minus_ratio"] = 1.0 - profile.ratios[k - 1];
      return d;
    });
  }
  return r;
}

std::optional<Observable> observable_of(const Config& cfg, const Substitution& sub, const FixedPointHandle& handle,
                                        const Limits& limits) {
  if (cfg.observable.empty()) return std::nullopt;
  auto f = Observable::parse(cfg.observable, sub.alphabet());
  if (cfg.mean_zero) f = f.centered(handle, std::min<std::uint64_t>(10'000'000, limits.table_limit));
  return f;
}

Report observable_report(const Observable& f) {
  return Report{{"spec", f.description()},
                {"mean_subtracted", complex_value(f.mean())},
                {"mean_source", f.mean_source()},
                {"sup", f.sup()}};
}

Report series_report(const CorrelationReport& rep) {
  Report points = Report::array();
  for (std::size_t i = 0; i < rep.checkpoints.size(); ++i) {
    Report p{{"N", rep.checkpoints[i]}};
    p.update(complex_value(rep.partial_means[i]));
    points.push_back(p);
  }
  return points;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

void finish_series(const Config& cfg, const CorrelationReport& rep, const std::string& title, Report& r) {
  r["bound"] = rep.bound;
  r["series"] = series_report(rep);
  if (!rep.partial_means.empty())
    r["final_below_first"] = std::abs(rep.partial_means.back()) < std::abs(rep.partial_means.front());
  if (cfg.timing) r["elapsed_seconds"] = rep.elapsed_seconds;
  if (!cfg.csv_path.empty()) {
    write_file(cfg.csv_path, render_csv(rep));
    r["csv"] = cfg.csv_path;
  }
  if (!cfg.svg_path.empty()) {
    write_file(cfg.svg_path, render_svg(rep, title));
    r["svg"] = cfg.svg_path;
  }
}

Report correlate_command(const Config& cfg, const Substitution& sub, const Limits& limits) {
  const auto N = usage_checked([&] { return parse_count(cfg.n_text); });
  const auto cps = usage_checked([&] { return parse_checkpoints(cfg.checkpoints, N); });
  if (cfg.observable.empty()) throw UsageError("--observable is required");
  const auto handle = find_fixed_seed(sub, limits);
  const auto f = *observable_of(cfg, sub, handle, limits);
  const auto fn = ArithmeticFunction::parse(cfg.mult, N, cfg.workers, limits);
  const auto rep = correlate(handle, f, fn, N, cps, cfg.workers);
  Report r;
  r["command"] = "correlate";
  r["input"] = cfg.input;
  r["function"] = fn.label();
  r["N"] = N;
  r["observable"] = observable_report(f);
  finish_series(cfg, rep, "|(1/N) sum a_n u(n)|, " + fn.label(), r);
  return r;
}

Report kbsz_command(const Config& cfg, const Substitution& sub, const Limits& limits) {
  const auto N = usage_checked([&] { return parse_count(cfg.n_text); });
  const auto cps = usage_checked([&] { return parse_checkpoints(cfg.checkpoints, N); });
  if (cfg.observable.empty()) throw UsageError("--observable is required");
  const auto handle = find_fixed_seed(sub, limits);
  const auto f = *observable_of(cfg, sub, handle, limits);
  const auto rep = kbsz_cross(handle, f, cfg.p, cfg.q, N, cps, cfg.workers);
  Report r;
  r["command"] = "kbsz";
  r["input"] = cfg.input;
  r["p"] = cfg.p;
  r["q"] = cfg.q;
  r["N"] = N;
  r["observable"] = observable_report(f);
  finish_series(cfg, rep, "|(1/N) sum a_pn conj(a_qn)|", r);
  return r;
}

Report momo_command(const Config& cfg, const Substitution& sub, const Limits& limits) {
  const auto N = usage_checked([&] { return parse_count(cfg.n_text); });
  const auto blocks = usage_checked([&] { return parse_blocks(cfg.blocks); });
  const auto handle = find_fixed_seed(sub, limits);
  const auto f = observable_of(cfg, sub, handle, limits);
  const auto fn = ArithmeticFunction::parse(cfg.mult, N, cfg.workers, limits);
  const auto rep = momo_short_intervals(handle, f, fn, blocks, N, cfg.workers);
  Report r;
  r["command"] = "momo";
  r["input"] = cfg.input;
  r["function"] = fn.label();
  r["blocks"] = cfg.blocks;
  r["N"] = N;
  r["observable"] = f ? observable_report(*f) : Report("constant 1");
  r["K"] = rep.blocks;
  r["b_K"] = rep.last_boundary;
  r["value"] = rep.value;
  if (cfg.timing) r["elapsed_seconds"] = rep.elapsed_seconds;
  return r;
}

Report fixtures_command(const Config& cfg) {
  Report r;
  r["command"] = "fixtures";
  Report list = Report::array();
  for (const auto& f : fixtures()) list.push_back(Report{{"name", f.name}, {"description", f.description}});
  r["count"] = fixtures().size();
  r["fixtures"] = list;
  if (!cfg.write_dir.empty()) {
    fs::create_directories(cfg.write_dir);
    for (const auto& f : fixtures()) write_file((fs::path(cfg.write_dir) / (std::string(f.name) + ".json")).string(), std::string(f.text));
    r["written_to"] = cfg.write_dir;
  }
  return r;
}

std::string check_input(const std::string& input) {
  if (input.starts_with(kFixturePrefix)) {
    const auto name = std::string_view(input).substr(kFixturePrefix.size());
    for (const auto& f : fixtures())
      if (f.name == name) return {};
    return "unknown bundled fixture: " + std::string(name);
  }
  std::error_code ec;
  if (!fs::is_regular_file(input, ec)) return "file does not exist: " + input;
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Constant-length substitutions: structure, joinings and correlation experiments", "substkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Print the report as JSON");
  app.add_option("--workers", cfg.workers, "Worker threads for sieves and correlation sums")->check(CLI::Range(1, 1024));
  app.add_option("--memory-limit", cfg.memory_limit, "Largest letter or sieve table, in entries (e.g. 1e8)");
  app.add_flag("--timing", cfg.timing, "Include wall-clock times in correlation reports");

  const CLI::Validator input_check(check_input, "FILE");
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Substitution file, or fixture:<name> for a bundled one")
        ->required()
        ->check(input_check);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural invariants of a substitution");
  add_input(analyze_cmd);

  auto* fixpoint_cmd = app.add_subcommand("fixpoint", "Letters of the one-sided fixed point");
  add_input(fixpoint_cmd);
  fixpoint_cmd->add_option("--length", cfg.length, "Number of letters")->check(CLI::Range(1ull, 100'000'000ull));
  fixpoint_cmd->add_option("--from", cfg.from, "First position");

  auto* sync_cmd = app.add_subcommand("sync", "Synchronizing family and synchronizing part");
  add_input(sync_cmd);

  auto* tower_cmd = app.add_subcommand("tower", "Joining, group extension and eta, with theorem checks");
  add_input(tower_cmd);
  tower_cmd->add_option("--emit", cfg.emit_dir, "Directory for the constructed substitutions");

  auto* wrap_cmd = app.add_subcommand("wrap", "Singleton column counts and the periodic approximant distance");
  add_input(wrap_cmd);
  wrap_cmd->add_option("--k", cfg.k_max, "Largest power")->check(CLI::Range(1, 64));
  wrap_cmd->add_option("--dw-power", cfg.dw_power, "Approximant period is length^k (0 disables)");

  auto add_series_flags = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.n_text, "Number of terms (e.g. 1e7)");
    sub->add_option("--observable", cfg.observable, "code1:a=1,b=-1 | window:r=1:<file> | const1");
    sub->add_flag("--mean-zero", cfg.mean_zero, "Subtract the observable's mean along the fixed point");
  };
  auto* correlate_cmd = app.add_subcommand("correlate", "(1/N) sum a_n u(n) at checkpoints");
  add_input(correlate_cmd);
  add_series_flags(correlate_cmd);
  correlate_cmd->add_option("--mult", cfg.mult, "moebius | liouville | dirichlet:q:i | alt1 | const1 | zero");
  correlate_cmd->add_option("--checkpoints", cfg.checkpoints, "log10 or a comma list");
  correlate_cmd->add_option("--csv", cfg.csv_path, "CSV output file");
  correlate_cmd->add_option("--svg", cfg.svg_path, "SVG plot output file");

  auto* kbsz_cmd = app.add_subcommand("kbsz", "(1/N) sum a_pn conj(a_qn) at checkpoints");
  add_input(kbsz_cmd);
  add_series_flags(kbsz_cmd);
  kbsz_cmd->add_option("--p", cfg.p, "First prime");
  kbsz_cmd->add_option("--q", cfg.q, "Second prime");
  kbsz_cmd->add_option("--checkpoints", cfg.checkpoints, "log10 or a comma list");
  kbsz_cmd->add_option("--csv", cfg.csv_path, "CSV output file");
  kbsz_cmd->add_option("--svg", cfg.svg_path, "SVG plot output file");

  auto* momo_cmd = app.add_subcommand("momo", "Short-interval averages over blocks b_k = k^m");
  add_input(momo_cmd);
  add_series_flags(momo_cmd);
  momo_cmd->add_option("--mult", cfg.mult, "moebius | liouville | dirichlet:q:i | alt1 | const1 | zero");
  momo_cmd->add_option("--blocks", cfg.blocks, "k2, k3, ...");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List the bundled substitutions");
  fixtures_cmd->add_option("--write", cfg.write_dir, "Write the fixture files into a directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "UsageError: " << e.what() << "\n";
    return 2;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  Report report;
  int code = 0;
  try {
    const auto limits = limits_of(cfg);
    if (cfg.command == "fixtures") {
      report = fixtures_command(cfg);
    } else {
      const auto sub = load_input(cfg.input);
      if (cfg.command == "analyze") report = analyze(cfg, sub, limits);
      else if (cfg.command == "fixpoint") report = fixpoint(cfg, sub, limits);
      else if (cfg.command == "sync") report = sync(cfg, sub, limits);
      else if (cfg.command == "tower") code = tower(cfg, sub, limits, report);
      else if (cfg.command == "wrap") report = wrap(cfg, sub, limits);
      else if (cfg.command == "correlate") report = correlate_command(cfg, sub, limits);
      else if (cfg.command == "kbsz") report = kbsz_command(cfg, sub, limits);
      else if (cfg.command == "momo") report = momo_command(cfg, sub, limits);
    }
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // theorem failures still print whatever was assembled before the check
    if (is_bug_signal(e.code()) && !report.empty()) out << (cfg.json ? render_json(report) : render_text(report));
    err << e.name() << ": " << e.what() << "\n";
    return is_bug_signal(e.code()) ? 3 : 1;
  } catch (const std::bad_alloc&) {
    err << "Overflow: out of memory\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "ParseError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "InternalInvariantViolation: " << e.what() << "\n";
    return 3;
  }
  out << (cfg.json ? render_json(report) : render_text(report));
  return code;
}

}  // namespace substkit::cli
