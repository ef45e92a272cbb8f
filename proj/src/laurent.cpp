#include "lucasx/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lucasx {

Monomial::Monomial(std::initializer_list<int> e) {
  if (e.size() > kMaxDim) throw std::invalid_argument("Monomial: more than 4 exponents");
  std::copy(e.begin(), e.end(), exps.begin());
}

int Monomial::degree() const {
  int s = 0;
  for (int e : exps) s += e;
  return s;
}

bool Monomial::is_zero() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxDim; ++i) r.exps[i] = exps[i] + o.exps[i];
  return r;
}

Monomial Monomial::operator-() const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxDim; ++i) r.exps[i] = -exps[i];
  return r;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;
}

Modulus::Modulus(std::uint64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("Modulus must be at least 2");
}

LaurentPoly::LaurentPoly(std::size_t dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("LaurentPoly: dimension must be in 1..4, got " +
                                std::to_string(dim));
  }
}

LaurentPoly LaurentPoly::constant(std::size_t dim, const Integer& c) {
  LaurentPoly f(dim);
  f.add_term(Monomial{}, c);
  return f;
}

LaurentPoly LaurentPoly::term(std::size_t dim, const Monomial& m, const Integer& c) {
  LaurentPoly f(dim);
  f.add_term(m, c);
  return f;
}

LaurentPoly LaurentPoly::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw std::invalid_argument("LaurentPoly::variable: index out of range");
  Monomial m;
  m[i] = 1;
  return term(dim, m);
}

Integer LaurentPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Monomial> LaurentPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

void LaurentPoly::check_monomial(const Monomial& m) const {
  for (std::size_t i = dim_; i < kMaxDim; ++i) {
    if (m[i] != 0) {
      throw std::invalid_argument("monomial uses variable " + std::to_string(i + 1) +
                                  " of a " + std::to_string(dim_) +
                                  "-variable polynomial");
    }
  }
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  check_monomial(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

void require_same_dim(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(f.dim()) +
                                " vs " + std::to_string(g.dim()));
  }
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = mul(*this, o);
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g,
                const std::optional<Modulus>& mod) {
  require_same_dim(f, g);
  LaurentPoly::TermMap acc;
  Integer prod;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      prod = cf * cg;
      auto [it, inserted] = acc.try_emplace(mf + mg, prod);
      if (!inserted) it->second += prod;
    }
  }
  LaurentPoly out(f.dim());
  for (auto& [m, c] : acc) {
    if (mod) c = mod->reduce(c);
    out.add_term(m, c);
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& f, unsigned long n, const std::optional<Modulus>& mod) {
  PowerSequence seq(f, mod);
  while (seq.exponent() < n) seq.advance();
  return seq.current();
}

LaurentPoly scale(const LaurentPoly& f, const Integer& c) {
  LaurentPoly out(f.dim());
  if (c == 0) return out;
  for (const auto& [m, v] : f.terms()) out.add_term(m, v * c);
  return out;
}

PowerSequence::PowerSequence(LaurentPoly base, std::optional<Modulus> mod)
    : base_(std::move(base)), mod_(mod), current_(LaurentPoly::constant(base_.dim(), 1)) {
  if (mod_) current_ = reduce_mod(current_, *mod_);
}

void PowerSequence::advance() {
  current_ = mul(current_, base_, mod_);
  ++exponent_;
}

namespace {

bool divisible(const Monomial& m, std::uint64_t p) {
  auto sp = static_cast<int>(p);
  return std::all_of(m.exps.begin(), m.exps.end(), [sp](int e) { return e % sp == 0; });
}

Monomial divide_exponents(const Monomial& m, std::uint64_t p) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxDim; ++i) r[i] = m[i] / static_cast<int>(p);
  return r;
}

// Residue class of an exponent vector, packed for hashing.
std::uint64_t residue_key(const Monomial& m, std::uint64_t p) {
  std::uint64_t key = 0;
  for (int e : m.exps) key = key * p + mod_canonical(static_cast<std::int64_t>(e), p);
  return key;
}

}  // namespace

LaurentPoly cartier(const LaurentPoly& f, std::uint64_t p) {
  require_prime(p, "cartier");
  LaurentPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) {
    if (divisible(m, p)) out.add_term(divide_exponents(m, p), c);
  }
  return out;
}

LaurentPoly cartier_of_product(const LaurentPoly& f, const LaurentPoly& g, std::uint64_t p,
                               const std::optional<Modulus>& mod) {
  require_same_dim(f, g);
  require_prime(p, "cartier_of_product");
  std::unordered_map<std::uint64_t, std::vector<std::pair<Monomial, const Integer*>>> classes;
  for (const auto& [m, c] : g.terms()) classes[residue_key(m, p)].emplace_back(m, &c);

  LaurentPoly::TermMap acc;
  Integer prod;
  for (const auto& [mf, cf] : f.terms()) {
    auto it = classes.find(residue_key(-mf, p));
    if (it == classes.end()) continue;
    for (const auto& [mg, cg] : it->second) {
      prod = cf * *cg;
      auto [slot, inserted] = acc.try_emplace(divide_exponents(mf + mg, p), prod);
      if (!inserted) slot->second += prod;
    }
  }
  LaurentPoly out(f.dim());
  for (auto& [m, c] : acc) {
    if (mod) c = mod->reduce(c);
    out.add_term(m, c);
  }
  return out;
}

LaurentPoly frobenius_substitute(const LaurentPoly& f, std::uint64_t p) {
  LaurentPoly out(f.dim());
  auto sp = static_cast<int>(p);
  for (const auto& [m, c] : f.terms()) {
    Monomial scaled;
    for (std::size_t i = 0; i < kMaxDim; ++i) scaled[i] = m[i] * sp;
    out.add_term(scaled, c);
  }
  return out;
}

Integer constant_term(const LaurentPoly& f) { return f.coeff(Monomial{}); }

Integer coeff_at(const LaurentPoly& f, const Monomial& k) { return f.coeff(k); }

LaurentPoly reflect(const LaurentPoly& f, ReflectFlags flags) {
  LaurentPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    for (std::size_t i = 0; i < kMaxDim; ++i) {
      if (flags[i]) r[i] = -r[i];
    }
    out.add_term(r, c);
  }
  return out;
}

LaurentPoly reduce_mod(const LaurentPoly& f, const Modulus& m) {
  LaurentPoly out(f.dim());
  for (const auto& [mono, c] : f.terms()) {
    Residue r = m.reduce(c);
    if (r != 0) out.add_term(mono, Integer(static_cast<unsigned long>(r)));
  }
  return out;
}

ExponentBox exponent_box(const LaurentPoly& f) {
  ExponentBox box;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < kMaxDim; ++i) {
      if (first || m[i] < box.lo[i]) box.lo[i] = m[i];
      if (first || m[i] > box.hi[i]) box.hi[i] = m[i];
    }
    first = false;
  }
  return box;
}

int exponent_radius(const LaurentPoly& f) {
  int r = 0;
  for (const auto& [m, c] : f.terms()) {
    for (int e : m.exps) r = std::max(r, std::abs(e));
  }
  return r;
}

}  // namespace lucasx
