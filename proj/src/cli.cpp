#include "lucasx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lucasx/congruence.hpp"
#include "lucasx/newton.hpp"
#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"
#include "lucasx/pscheme.hpp"

namespace lucasx::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned env_threads() {
  if (const char* v = std::getenv("LUCASX_THREADS")) {
    long n = std::strtol(v, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs jobs[i] for every i on up to thread_count() workers; results keep
// the input order.
template <class T>
std::vector<T> fan_out(const std::vector<std::function<T()>>& jobs) {
  std::vector<T> results(jobs.size());
  const std::size_t workers = std::min<std::size_t>(thread_count(), jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    return results;
  }
  std::vector<std::future<T>> pending;
  std::size_t next = 0;
  while (next < jobs.size()) {
    std::size_t batch_end = std::min(jobs.size(), next + workers);
    pending.clear();
    for (std::size_t i = next; i < batch_end; ++i) {
      pending.push_back(std::async(std::launch::async, jobs[i]));
    }
    for (std::size_t i = next; i < batch_end; ++i) results[i] = pending[i - next].get();
    next = batch_end;
  }
  return results;
}

std::vector<std::string> variables(const CliConfig& cfg) {
  if (cfg.vars.empty()) throw UsageError("--vars is required (e.g. --vars x,y)");
  return parse_variable_list(cfg.vars);
}

CtSpec spec_from(const CliConfig& cfg) {
  if (cfg.P.empty()) throw UsageError("--P is required");
  auto vars = variables(cfg);
  return CtSpec(parse(cfg.P, vars), parse(cfg.Q.empty() ? "1" : cfg.Q, vars));
}

std::vector<std::uint64_t> primes_of(const CliConfig& cfg) {
  if (cfg.primes.empty()) throw UsageError("--primes is required");
  for (auto p : cfg.primes) require_prime(p, "--primes");
  return cfg.primes;
}

std::uint64_t single_prime(const CliConfig& cfg) {
  auto ps = primes_of(cfg);
  if (ps.size() != 1) throw UsageError("exactly one prime expected (--prime p)");
  return ps[0];
}

Oracle oracle_from(const CliConfig& cfg) {
  auto o = oracles::named(cfg.oracle);
  if (!o) {
    std::string known;
    for (const auto& n : oracles::names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown oracle '" + cfg.oracle + "' (known: " + known + ")");
  }
  return *o;
}

SequenceWindow oracle_window(const Oracle& o, std::size_t n_max) {
  SequenceWindow w;
  for (std::size_t n = 0; n <= n_max; ++n) w.values.push_back(o(n));
  return w;
}

std::string residue_text(Residue v, std::uint64_t m, bool signed_output) {
  return signed_output ? std::to_string(balanced(v, m)) : std::to_string(v);
}

int exit_for(const std::vector<CongruenceReport>& reports) {
  int code = kPass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::inapplicable) code = std::max<int>(code, kUsage);
    if (r.verdict == Verdict::fail) code = std::max<int>(code, kCounterexample);
  }
  return code;
}

int emit_reports(const std::vector<CongruenceReport>& reports, std::ostream& out) {
  for (const auto& r : reports) out << report_format(r);
  return exit_for(reports);
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--scheme is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read scheme file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  CtSpec spec = spec_from(cfg);
  std::optional<Modulus> mod;
  if (!cfg.primes.empty()) mod = Modulus(prime_power(single_prime(cfg), cfg.r));
  SequenceWindow w = ct_sequence(spec, cfg.n_max, mod);
  if (cfg.output == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < w.size(); ++n) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["value"] = mod && cfg.signed_output ? nlohmann::ordered_json(balanced(w.residue(n, mod->value()), mod->value()))
                                              : integer_json(w[n]);
      j.push_back(row);
    }
    out << j.dump() << "\n";
    return kPass;
  }
  out << "n\tvalue\n";
  for (std::size_t n = 0; n < w.size(); ++n) {
    out << n << '\t';
    if (mod) {
      out << residue_text(w.residue(n, mod->value()), mod->value(), cfg.signed_output);
    } else {
      out << w[n];
    }
    out << '\n';
  }
  return kPass;
}

int cmd_lucas(const CliConfig& cfg, std::ostream& out) {
  auto ps = primes_of(cfg);
  std::vector<std::function<CongruenceReport()>> jobs;
  if (!cfg.oracle.empty()) {
    auto w = std::make_shared<SequenceWindow>(oracle_window(oracle_from(cfg), cfg.n_max));
    for (auto p : ps) {
      jobs.push_back([w, p, &cfg] {
        auto r = lucas_verify(*w, p, cfg.n_max);
        r.params["oracle"] = cfg.oracle;
        return r;
      });
    }
    return emit_reports(fan_out(jobs), out);
  }

  CtSpec spec = spec_from(cfg);
  // One powering modulo the product of the primes when that fits.
  unsigned __int128 prod = 1;
  for (auto p : ps) prod *= p;
  if (prod < (static_cast<unsigned __int128>(1) << 40)) {
    auto w = std::make_shared<SequenceWindow>(
        ct_sequence(spec, cfg.n_max, Modulus(static_cast<std::uint64_t>(prod))));
    for (auto p : ps) {
      jobs.push_back([w, p, &cfg, &spec] {
        auto r = lucas_verify(w->reduced(Modulus(p)), p, cfg.n_max);
        r.params["P"] = to_canonical_string(spec.P);
        r.params["Q"] = to_canonical_string(spec.Q);
        return r;
      });
    }
  } else {
    for (auto p : ps) jobs.push_back([p, &cfg, &spec] { return lucas_verify(spec, p, cfg.n_max); });
  }
  return emit_reports(fan_out(jobs), out);
}

int cmd_dwork(const CliConfig& cfg, std::ostream& out) {
  auto ps = primes_of(cfg);
  std::vector<std::function<CongruenceReport()>> jobs;
  if (!cfg.oracle.empty()) {
    Oracle o = oracle_from(cfg);
    for (auto p : ps) {
      jobs.push_back([o, p, &cfg] {
        std::size_t top = prime_power(p, cfg.r) * cfg.m_max + cfg.n_max;
        auto r = dwork_verify(oracle_window(o, top), p, cfg.r, cfg.m_max, cfg.n_max);
        r.params["oracle"] = cfg.oracle;
        return r;
      });
    }
  } else {
    CtSpec spec = spec_from(cfg);
    for (auto p : ps) {
      jobs.push_back([spec, p, &cfg] { return dwork_verify(spec, p, cfg.r, cfg.m_max, cfg.n_max); });
    }
  }
  return emit_reports(fan_out(jobs), out);
}

int cmd_glc(const CliConfig& cfg, std::ostream& out, bool simple) {
  CtSpec spec = spec_from(cfg);
  auto ps = primes_of(cfg);
  std::vector<std::function<CongruenceReport()>> jobs;
  for (auto p : ps) {
    jobs.push_back([&spec, p, &cfg, simple] {
      return simple ? glc_simple_verify(spec.P, spec.Q, p, cfg.n_max)
                    : glc_verify(spec.P, spec.Q, p, cfg.n_max);
    });
  }
  return emit_reports(fan_out(jobs), out);
}

int cmd_scheme_synth(const CliConfig& cfg, std::ostream& out) {
  CtSpec spec = spec_from(cfg);
  auto sch = synthesize(spec, single_prime(cfg), cfg.r, cfg.max_states);
  // Labels in the user's variable names.
  if (sch.r == 1) {
    auto vars = variables(cfg);
    auto dflt = default_variables(spec.P.dim());
    for (auto& label : sch.labels) label = to_canonical_string(parse(label, dflt), vars);
  }
  out << scheme_dump(sch);
  return kPass;
}

int cmd_scheme_eval(const CliConfig& cfg, std::ostream& out) {
  auto sch = scheme_parse(read_file(cfg.scheme_path));
  const std::uint64_t m = sch.modulus();
  out << "n\tvalue\n";
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    out << n << '\t' << residue_text(evaluate(sch, n), m, cfg.signed_output) << '\n';
  }
  return kPass;
}

int cmd_scheme_verify(const CliConfig& cfg, std::ostream& out) {
  auto sch = scheme_parse(read_file(cfg.scheme_path));
  CtSpec spec = spec_from(cfg);
  return emit_reports({verify(sch, spec, cfg.n_max)}, out);
}

nlohmann::ordered_json points_json(const std::vector<LatticePoint>& pts) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& p : pts) j.push_back(p);
  return j;
}

int cmd_polytope(const CliConfig& cfg, std::ostream& out) {
  if (cfg.P.empty()) throw UsageError("--P is required");
  LaurentPoly f = parse(cfg.P, variables(cfg));
  NewtonPolytope np = newton_polytope(f);
  auto interior = interior_integral_points(np);
  nlohmann::ordered_json j;
  j["dim"] = np.dim;
  j["affine_dim"] = np.affine_dim;
  j["vertices"] = points_json(np.vertices);
  nlohmann::ordered_json facets = nlohmann::ordered_json::array();
  for (const auto& fc : np.facets) {
    nlohmann::ordered_json fj;
    fj["normal"] = fc.normal;
    fj["offset"] = fc.offset;
    facets.push_back(fj);
  }
  j["facets"] = facets;
  j["interior_points"] = points_json(interior);
  j["origin_only_interior"] = origin_only_interior(f);
  j["support_in_unit_box"] = support_in_unit_box(f);
  out << j.dump() << "\n";
  return kPass;
}

int cmd_catalan(const CliConfig& cfg, std::ostream& out) {
  const std::uint64_t p = single_prime(cfg);
  const std::string& method = cfg.method;
  std::function<Residue(std::uint64_t)> f;
  if (method == "direct") {
    Integer c = 1;
    auto values = std::make_shared<std::vector<Residue>>();
    for (std::uint64_t n = 0; n <= cfg.n_max; ++n) {
      values->push_back(mod_canonical(c, p));
      c = c * (2 * (2 * n + 1));
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 2);
    }
    f = [values](std::uint64_t n) { return (*values)[n]; };
  } else if (method == "digits") {
    f = [p](std::uint64_t n) { return catalan_digit_formula(n, p); };
  } else if (method == "step") {
    f = [p](std::uint64_t n) { return catalan_by_steps(n, p); };
  } else if (method == "mod3") {
    if (p != 3) throw UsageError("--method mod3 requires --prime 3");
    f = catalan_mod3;
  } else if (method == "mod5") {
    if (p != 5) throw UsageError("--method mod5 requires --prime 5");
    f = catalan_mod5;
  } else {
    throw UsageError("unknown --method '" + method + "'");
  }
  out << "n\tvalue\n";
  for (std::uint64_t n = 0; n <= cfg.n_max; ++n) {
    out << n << '\t' << residue_text(f(n), p, cfg.signed_output) << '\n';
  }
  return kPass;
}

int cmd_never_divides(const CliConfig& cfg, std::ostream& out) {
  CliConfig c = cfg;
  if (c.oracle.empty()) c.oracle = "S";
  auto primes = never_divisible_primes(oracle_from(c), c.bound);
  if (cfg.output == "json") {
    out << nlohmann::ordered_json(primes).dump() << "\n";
    return kPass;
  }
  for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? "," : "") << primes[i];
  out << "\n";
  return kPass;
}

}  // namespace

unsigned thread_count() { return env_threads(); }

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = cfg.subcommand;
    if (s == "eval") return cmd_eval(cfg, out);
    if (s == "lucas") return cmd_lucas(cfg, out);
    if (s == "dwork") return cmd_dwork(cfg, out);
    if (s == "glc") return cmd_glc(cfg, out, false);
    if (s == "glc-simple") return cmd_glc(cfg, out, true);
    if (s == "scheme synth") return cmd_scheme_synth(cfg, out);
    if (s == "scheme eval") return cmd_scheme_eval(cfg, out);
    if (s == "scheme verify") return cmd_scheme_verify(cfg, out);
    if (s == "polytope") return cmd_polytope(cfg, out);
    if (s == "catalan") return cmd_catalan(cfg, out);
    if (s == "never-divides") return cmd_never_divides(cfg, out);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at position " << e.position() << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-term sequences and their congruences modulo primes"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_spec = [&cfg](CLI::App* sub) {
    sub->add_option("--vars", cfg.vars, "Declared variables, e.g. x,y");
    sub->add_option("--P", cfg.P, "Laurent polynomial P");
    sub->add_option("--Q", cfg.Q, "Laurent polynomial Q (default 1)");
  };
  auto add_primes = [&cfg](CLI::App* sub) {
    sub->add_option("--primes,--prime", cfg.primes, "Primes, comma separated")->delimiter(',');
  };
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Largest index checked");
    sub->add_flag("--signed", cfg.signed_output, "Print balanced residues");
    sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "Print A(n) = ct[P^n Q] for n <= n-max");
  add_spec(eval);
  add_primes(eval);
  add_common(eval);
  eval->add_option("--r", cfg.r, "Reduce modulo p^r");

  auto* lucas = app.add_subcommand("lucas", "Check A(pn+k) = A(n)A(k) mod p");
  add_spec(lucas);
  add_primes(lucas);
  add_common(lucas);
  lucas->add_option("--oracle", cfg.oracle, "Named sequence instead of --P");

  auto* dwork = app.add_subcommand("dwork", "Check the Dwork congruences mod p^r");
  add_spec(dwork);
  add_primes(dwork);
  add_common(dwork);
  dwork->add_option("--r", cfg.r, "Power of p");
  dwork->add_option("--m-max", cfg.m_max, "Largest m checked");
  dwork->add_option("--oracle", cfg.oracle, "Named sequence instead of --P");

  auto* glc = app.add_subcommand("glc", "Generalized Lucas congruences");
  add_spec(glc);
  add_primes(glc);
  add_common(glc);

  auto* glcs = app.add_subcommand("glc-simple", "Simplified generalized Lucas congruences");
  add_spec(glcs);
  add_primes(glcs);
  add_common(glcs);

  auto* scheme = app.add_subcommand("scheme", "Linear p-schemes");
  scheme->require_subcommand(1);
  auto* synth = scheme->add_subcommand("synth", "Synthesize a scheme for ct[P^n Q] mod p^r");
  add_spec(synth);
  add_primes(synth);
  synth->add_option("--r", cfg.r, "Power of p");
  synth->add_option("--max-states", cfg.max_states, "Abort past this many states");
  auto* seval = scheme->add_subcommand("eval", "Evaluate a scheme file");
  seval->add_option("--scheme", cfg.scheme_path, "Scheme JSON file")->required();
  add_common(seval);
  auto* sverify = scheme->add_subcommand("verify", "Check a scheme file against ct[P^n Q]");
  sverify->add_option("--scheme", cfg.scheme_path, "Scheme JSON file")->required();
  add_spec(sverify);
  add_common(sverify);

  auto* poly = app.add_subcommand("polytope", "Newton polytope of P");
  poly->add_option("--vars", cfg.vars, "Declared variables");
  poly->add_option("--P", cfg.P, "Laurent polynomial")->required();

  auto* cat = app.add_subcommand("catalan", "Catalan numbers modulo a prime");
  add_primes(cat);
  add_common(cat);
  cat->add_option("--method", cfg.method, "direct, digits, step, mod3 or mod5")
      ->check(CLI::IsMember({"direct", "digits", "step", "mod3", "mod5"}));

  auto* nd = app.add_subcommand("never-divides", "Primes never dividing a Lucas sequence");
  nd->add_option("--oracle", cfg.oracle, "Named sequence (default S)");
  nd->add_option("--bound", cfg.bound, "Largest prime considered");
  nd->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    for (auto* inner : sub->get_subcommands()) cfg.subcommand += " " + inner->get_name();
  }
  return run(cfg, out, err);
}

}  // namespace lucasx::cli
