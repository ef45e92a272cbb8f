#include "lucasx/pscheme.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "lucasx/congruence.hpp"
#include "lucasx/parser.hpp"

namespace lucasx {

void LinearPScheme::validate() const {
  require_prime(p, "LinearPScheme");
  if (r < 1) throw std::invalid_argument("LinearPScheme: r must be at least 1");
  if (states < 1) throw std::invalid_argument("LinearPScheme: need at least one state");
  const std::uint64_t m = modulus();
  if (matrices.size() != p) throw std::invalid_argument("LinearPScheme: expected p matrices");
  for (const auto& mk : matrices) {
    if (mk.size() != states) throw std::invalid_argument("LinearPScheme: matrix row count");
    for (const auto& row : mk) {
      if (row.size() != states) throw std::invalid_argument("LinearPScheme: matrix column count");
      for (Residue v : row) {
        if (v >= m) throw std::invalid_argument("LinearPScheme: entry not reduced mod p^r");
      }
    }
  }
  if (init.size() != states) throw std::invalid_argument("LinearPScheme: init length");
  for (Residue v : init) {
    if (v >= m) throw std::invalid_argument("LinearPScheme: init entry not reduced mod p^r");
  }
  if (!labels.empty() && labels.size() != states) {
    throw std::invalid_argument("LinearPScheme: label count");
  }
}

std::vector<Residue> evaluate_states(const LinearPScheme& sch, std::uint64_t n) {
  const std::uint64_t m = sch.modulus();
  std::vector<unsigned> ds = digits(n, sch.p).digits;
  std::vector<Residue> v = sch.init;
  std::vector<Residue> next(sch.states);
  for (std::size_t d = ds.size(); d-- > 0;) {
    const auto& M = sch.matrices[ds[d]];
    for (std::size_t i = 0; i < sch.states; ++i) {
      unsigned __int128 acc = 0;
      for (std::size_t j = 0; j < sch.states; ++j) {
        acc += static_cast<unsigned __int128>(M[i][j]) * v[j];
      }
      next[i] = static_cast<Residue>(acc % m);
    }
    v.swap(next);
  }
  return v;
}

Residue evaluate(const LinearPScheme& sch, std::uint64_t n) { return evaluate_states(sch, n)[0]; }

LinearPScheme from_lucas_table(std::span<const Residue> base, std::uint64_t p) {
  require_prime(p, "from_lucas_table");
  if (base.size() != p) throw std::invalid_argument("from_lucas_table: need exactly p values");
  if (base[0] % p != 1) throw std::invalid_argument("from_lucas_table: A(0) must be 1 mod p");
  LinearPScheme s;
  s.p = p;
  s.r = 1;
  s.states = 1;
  for (std::uint64_t k = 0; k < p; ++k) s.matrices.push_back({{base[k] % p}});
  s.init = {1};
  return s;
}

LinearPScheme two_state_from_glc(const LaurentPoly& P, const LaurentPoly& Q, std::uint64_t p) {
  GlcData g = glc_data(P, Q, p);
  if (auto why = glc_simple_obstruction(g)) throw HypothesisError("two_state_from_glc: " + *why);
  std::array<LaurentPoly, 2> qs{Q, LaurentPoly::constant(P.dim(), 1)};
  std::array<std::size_t, 2> ns{p - 1, p - 1};
  auto w = ct_sequences(P, qs, ns, Modulus(p));
  const bool constant_q = g.beta == 0 && g.gamma == 0 && g.delta == 0;

  LinearPScheme s;
  s.p = p;
  s.r = 1;
  s.states = 2;
  for (std::uint64_t k = 0; k < p; ++k) {
    Residue ak = w[0].residue(k, p);
    std::vector<Residue> row0{0, ak};
    if (k == p - 1 && !constant_q) row0 = {1, (ak + p - w[0].residue(0, p)) % p};
    s.matrices.push_back({row0, {0, w[1].residue(k, p)}});
  }
  s.init = {w[0].residue(0, p), 1 % p};
  s.labels = {"A", "B"};
  return s;
}

namespace {

struct SynthState {
  unsigned level;
  LaurentPoly R;
};

// u with R == u * S mod m for a unit u, if one exists.
std::optional<Residue> unit_ratio(const LaurentPoly& R, const LaurentPoly& S, std::uint64_t p,
                                  const Modulus& mod) {
  if (R.size() != S.size()) return std::nullopt;
  const std::uint64_t m = mod.value();
  for (const auto& [mono, c] : S.terms()) {
    Residue cs = mod.reduce(c);
    if (cs % p == 0) continue;
    Residue u = mul_mod(mod.reduce(R.coeff(mono)), inverse_mod(static_cast<std::int64_t>(cs), m), m);
    if (u % p == 0) return std::nullopt;
    if (reduce_mod(scale(S, Integer(static_cast<unsigned long>(u))), mod) == R) return u;
    return std::nullopt;
  }
  if (R == S) return Residue{1};
  return std::nullopt;
}

}  // namespace

LinearPScheme synthesize(const CtSpec& spec, std::uint64_t p, unsigned r, std::size_t max_states) {
  require_prime(p, "synthesize");
  if (r < 1) throw std::invalid_argument("synthesize: r must be at least 1");
  const std::uint64_t m = prime_power(p, r);
  const std::uint64_t top_step = m / p;
  const Modulus mod(m);
  const long radius_cap = static_cast<long>(exponent_radius(spec.Q)) +
                          static_cast<long>(m) * exponent_radius(spec.P);
  const auto vars = default_variables(spec.P.dim());

  std::vector<SynthState> states;
  std::map<std::uint64_t, LaurentPoly> powers;
  auto power_of_P = [&](std::uint64_t e) -> const LaurentPoly& {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, pow(spec.P, e, mod)).first;
    return it->second;
  };
  // rows[k][i] lists (column, coefficient) pairs for state i under digit k.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Residue>>>> rows(p);

  auto find_or_add = [&](unsigned level, LaurentPoly R) -> std::optional<std::pair<std::size_t, Residue>> {
    if (R.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (states[j].level != level) continue;
      if (auto u = unit_ratio(R, states[j].R, p, mod)) return std::make_pair(j, *u);
    }
    if (exponent_radius(R) > radius_cap) {
      throw std::length_error("synthesize: state exponents exceed the radius bound " +
                              std::to_string(radius_cap));
    }
    if (states.size() >= max_states) {
      throw std::length_error("synthesize: more than " + std::to_string(max_states) + " states");
    }
    states.push_back({level, std::move(R)});
    return std::make_pair(states.size() - 1, Residue{1});
  };

  find_or_add(0, reduce_mod(spec.Q, mod));
  if (states.empty()) {
    // Q == 0 mod p^r: the zero sequence.
    states.push_back({0, LaurentPoly(spec.P.dim())});
  }

  for (std::size_t i = 0; i < states.size(); ++i) {
    const unsigned level = states[i].level;
    const LaurentPoly R = states[i].R;
    for (std::uint64_t k = 0; k < p; ++k) {
      std::optional<std::pair<std::size_t, Residue>> hit;
      if (!R.is_zero()) {
        if (level + 1 < r) {
          std::uint64_t e = prime_power(p, level) * k;
          hit = find_or_add(level + 1, reduce_mod(mul(power_of_P(e), R, mod), mod));
        } else {
          const LaurentPoly& Pk = power_of_P(top_step * k);
          hit = find_or_add(level, reduce_mod(cartier_of_product(Pk, R, p, mod), mod));
        }
      }
      rows[k].emplace_back();
      if (hit) rows[k].back().push_back(*hit);
    }
  }

  LinearPScheme s;
  s.p = p;
  s.r = r;
  s.states = states.size();
  s.matrices.assign(p, std::vector<std::vector<Residue>>(s.states, std::vector<Residue>(s.states, 0)));
  for (std::uint64_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < s.states; ++i) {
      for (const auto& [j, u] : rows[k][i]) s.matrices[k][i][j] = u;
    }
  }
  for (const auto& st : states) {
    s.init.push_back(mod.reduce(constant_term(st.R)));
    std::string label = to_canonical_string(st.R, vars);
    if (r > 1) label = "level " + std::to_string(st.level) + ": " + label;
    s.labels.push_back(std::move(label));
  }
  s.validate();
  return s;
}

CongruenceReport verify(const LinearPScheme& sch, const CtSpec& spec, std::size_t n_max) {
  sch.validate();
  const std::uint64_t m = sch.modulus();
  CongruenceReport report;
  report.kind = "scheme-verify";
  report.params["p"] = sch.p;
  report.params["r"] = sch.r;
  report.params["states"] = sch.states;
  report.params["n_max"] = n_max;
  report.params["P"] = to_canonical_string(spec.P);
  report.params["Q"] = to_canonical_string(spec.Q);
  SequenceWindow w = ct_sequence(spec, n_max, Modulus(m));
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    ++report.checked;
    Residue expected = w.residue(n, m);
    Residue actual = evaluate(sch, n);
    if (expected != actual) {
      report.fail({{{"n", static_cast<std::int64_t>(n)}},
                   Integer(static_cast<unsigned long>(expected)),
                   Integer(static_cast<unsigned long>(actual))});
      break;
    }
  }
  return report;
}

namespace {

SingleStateResult single_state_from_window(const SequenceWindow& w, std::uint64_t p,
                                           std::size_t n_max) {
  if (w.residue(0, p) != 1) {
    throw std::invalid_argument("is_single_state_reducible: A(0) must be 1 mod p");
  }
  SingleStateResult res;
  res.report = lucas_verify(w, p, n_max);
  res.reducible = res.report.passed();
  if (res.reducible) {
    std::vector<Residue> base;
    for (std::uint64_t k = 0; k < p; ++k) base.push_back(w.residue(k, p));
    res.witness = from_lucas_table(base, p);
  }
  return res;
}

}  // namespace

SingleStateResult is_single_state_reducible(const CtSpec& spec, std::uint64_t p,
                                            std::optional<std::size_t> n_max) {
  require_prime(p, "is_single_state_reducible");
  const std::size_t top = std::max<std::size_t>(n_max.value_or(p * p * p), p - 1);
  return single_state_from_window(ct_sequence(spec, top, Modulus(p)), p, top);
}

SingleStateResult is_single_state_reducible(const LinearPScheme& sch,
                                            std::optional<std::size_t> n_max) {
  sch.validate();
  const std::uint64_t p = sch.p;
  const std::size_t top = std::max<std::size_t>(n_max.value_or(p * p * p), p - 1);
  SequenceWindow w;
  w.modulus = Modulus(p);
  for (std::uint64_t n = 0; n <= top; ++n) {
    w.values.emplace_back(static_cast<unsigned long>(evaluate(sch, n) % p));
  }
  return single_state_from_window(w, p, top);
}

nlohmann::ordered_json scheme_json(const LinearPScheme& sch) {
  nlohmann::ordered_json j;
  j["p"] = sch.p;
  j["r"] = sch.r;
  j["states"] = sch.states;
  j["matrices"] = sch.matrices;
  j["init"] = sch.init;
  if (!sch.labels.empty()) j["labels"] = sch.labels;
  return j;
}

LinearPScheme scheme_from_json(const nlohmann::ordered_json& j) {
  LinearPScheme s;
  try {
    s.p = j.at("p").get<std::uint64_t>();
    s.r = j.at("r").get<unsigned>();
    s.states = j.at("states").get<std::size_t>();
    s.matrices = j.at("matrices").get<std::vector<std::vector<std::vector<Residue>>>>();
    s.init = j.at("init").get<std::vector<Residue>>();
    if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("scheme JSON: ") + e.what());
  }
  s.validate();
  return s;
}

std::string scheme_dump(const LinearPScheme& sch) { return scheme_json(sch).dump() + "\n"; }

LinearPScheme scheme_parse(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("scheme JSON: ") + e.what());
  }
  return scheme_from_json(j);
}

}  // namespace lucasx
