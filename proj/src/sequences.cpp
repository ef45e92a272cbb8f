#include "lucasx/sequences.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace lucasx {

CtSpec::CtSpec(LaurentPoly p) : CtSpec(p, LaurentPoly::constant(p.dim(), 1)) {}

CtSpec::CtSpec(LaurentPoly p, LaurentPoly q) : P(std::move(p)), Q(std::move(q)) {
  if (P.is_zero()) throw std::invalid_argument("CtSpec: P must be nonzero");
  if (P.dim() != Q.dim()) throw std::invalid_argument("CtSpec: P and Q dimensions differ");
}

SequenceWindow SequenceWindow::reduced(const Modulus& m) const {
  if (modulus && modulus->value() % m.value() != 0) {
    throw std::invalid_argument("SequenceWindow::reduced: modulus does not divide the window's");
  }
  SequenceWindow out;
  out.modulus = m;
  out.values.reserve(values.size());
  for (const auto& v : values) out.values.emplace_back(static_cast<unsigned long>(m.reduce(v)));
  return out;
}

namespace {

using Coord = std::array<long, kMaxDim>;

struct Box {
  std::size_t d = 1;
  Coord lo{};
  Coord hi{};

  bool empty() const {
    for (std::size_t i = 0; i < d; ++i) {
      if (lo[i] > hi[i]) return true;
    }
    return false;
  }

  std::size_t cells() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    return n;
  }

  Coord strides() const {
    Coord s{};
    long acc = 1;
    for (std::size_t i = d; i-- > 0;) {
      s[i] = acc;
      acc *= hi[i] - lo[i] + 1;
    }
    return s;
  }

  bool contains(const Coord& c) const {
    for (std::size_t i = 0; i < d; ++i) {
      if (c[i] < lo[i] || c[i] > hi[i]) return false;
    }
    return true;
  }

  long index(const Coord& c) const {
    Coord s = strides();
    long idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx += (c[i] - lo[i]) * s[i];
    return idx;
  }
};

Coord to_coord(const Monomial& m) {
  Coord c{};
  for (std::size_t i = 0; i < kMaxDim; ++i) c[i] = m[i];
  return c;
}

// Residues held in an unsigned word wide enough that a full step of
// accumulation (terms * (m-1)^2) never overflows; one reduction per cell.
template <class Word>
struct ResidueArith {
  using Cell = Word;
  using Coeff = Word;

  std::uint64_t m;
  std::vector<Word> table;  // reduction table for 16-bit words
  std::uint64_t fast_m = 0;

  ResidueArith(std::uint64_t modulus, std::uint64_t max_acc) : m(modulus) {
    if constexpr (sizeof(Word) == 2) {
      table.resize(max_acc + 1);
      for (std::uint64_t v = 0; v <= max_acc; ++v) table[v] = static_cast<Word>(v % m);
    } else if constexpr (sizeof(Word) == 4) {
      fast_m = UINT64_MAX / m + 1;
    }
  }

  Cell zero() const { return 0; }
  Cell one() const { return static_cast<Word>(1 % m); }
  Coeff coeff(const Integer& c) const { return static_cast<Word>(mod_canonical(c, m)); }
  bool is_zero_coeff(const Coeff& c) const { return c == 0; }

  void axpy(Cell* __restrict dst, const Cell* __restrict src, Coeff c, long len) const {
    for (long j = 0; j < len; ++j) dst[j] = static_cast<Word>(dst[j] + c * src[j]);
  }

  void finalize(std::vector<Cell>& data) const {
    if constexpr (sizeof(Word) == 2) {
      for (auto& v : data) v = table[v];
    } else if constexpr (sizeof(Word) == 4) {
      // Lemire's fastmod for 32-bit operands.
      for (auto& v : data) {
        std::uint64_t low = fast_m * v;
        v = static_cast<Word>((static_cast<unsigned __int128>(low) * m) >> 64);
      }
    } else {
      for (auto& v : data) v %= m;
    }
  }

  Integer ct_term(const Integer& qcoeff, const Cell& cell) const {
    return Integer(static_cast<unsigned long>(mul_mod(mod_canonical(qcoeff, m), cell, m)));
  }

  Integer finish(const Integer& v) const { return Integer(static_cast<unsigned long>(mod_canonical(v, m))); }
};

// Exact big-integer cells, optionally reduced modulo a large modulus.
struct ExactArith {
  using Cell = Integer;
  using Coeff = Integer;

  std::optional<Integer> m;

  Cell zero() const { return Integer(0); }
  Cell one() const { return Integer(1); }
  Coeff coeff(const Integer& c) const { return m ? Integer(c % *m) : c; }
  bool is_zero_coeff(const Coeff& c) const { return c == 0; }

  void axpy(Cell* dst, const Cell* src, const Coeff& c, long len) const {
    for (long j = 0; j < len; ++j) {
      if (src[j] != 0) mpz_addmul(dst[j].get_mpz_t(), c.get_mpz_t(), src[j].get_mpz_t());
    }
  }

  void finalize(std::vector<Cell>& data) const {
    if (!m) return;
    for (auto& v : data) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m->get_mpz_t());
  }

  Integer ct_term(const Integer& qcoeff, const Cell& cell) const { return qcoeff * cell; }

  Integer finish(const Integer& v) const {
    if (!m) return v;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m->get_mpz_t());
    return r;
  }
};

template <class Arith>
std::vector<SequenceWindow> run_powering(const Arith& arith, const LaurentPoly& P,
                                         std::span<const LaurentPoly> Qs,
                                         std::span<const std::size_t> n_max,
                                         const std::optional<Modulus>& mod,
                                         const PoweringLimits& limits) {
  using Cell = typename Arith::Cell;
  const std::size_t d = P.dim();
  const std::size_t total = *std::max_element(n_max.begin(), n_max.end());

  std::vector<SequenceWindow> out(Qs.size());
  for (std::size_t i = 0; i < Qs.size(); ++i) {
    out[i].modulus = mod;
    out[i].values.assign(n_max[i] + 1, Integer(0));
  }

  struct PTerm {
    Coord off;
    typename Arith::Coeff c;
  };
  std::vector<PTerm> pterms;
  for (const auto& [m, c] : P.terms()) {
    auto coeff = arith.coeff(c);
    if (!arith.is_zero_coeff(coeff)) pterms.push_back({to_coord(m), coeff});
  }

  ExponentBox pb = exponent_box(P);
  bool any_q = false;
  Coord qlo{};
  Coord qhi{};
  for (const auto& q : Qs) {
    if (q.is_zero()) continue;
    ExponentBox b = exponent_box(q);
    for (std::size_t i = 0; i < d; ++i) {
      qlo[i] = any_q ? std::min<long>(qlo[i], b.lo[i]) : b.lo[i];
      qhi[i] = any_q ? std::max<long>(qhi[i], b.hi[i]) : b.hi[i];
    }
    any_q = true;
  }
  if (!any_q) return out;

  // Cells of P^n that can still meet -supp(Q) after at most total-n more
  // factors of P.
  auto useful = [&](std::size_t n) {
    Box u;
    u.d = d;
    long t = static_cast<long>(total - n);
    for (std::size_t i = 0; i < d; ++i) {
      u.lo[i] = -qhi[i] - std::max(0L, t * pb.hi[i]);
      u.hi[i] = -qlo[i] - std::min(0L, t * pb.lo[i]);
    }
    return u;
  };

  auto intersect = [d](Box a, const Box& b) {
    for (std::size_t i = 0; i < d; ++i) {
      a.lo[i] = std::max(a.lo[i], b.lo[i]);
      a.hi[i] = std::min(a.hi[i], b.hi[i]);
    }
    return a;
  };

  Box cur;
  cur.d = d;
  cur = intersect(cur, useful(0));
  if (cur.empty()) return out;
  std::vector<Cell> data(1, arith.zero());
  data[0] = arith.one();
  std::vector<Cell> next;

  for (std::size_t n = 0;; ++n) {
    for (std::size_t qi = 0; qi < Qs.size(); ++qi) {
      if (n > n_max[qi]) continue;
      Integer acc = 0;
      for (const auto& [m, c] : Qs[qi].terms()) {
        Coord at = to_coord(-m);
        if (cur.contains(at)) acc += arith.ct_term(c, data[static_cast<std::size_t>(cur.index(at))]);
      }
      out[qi].values[n] = arith.finish(acc);
    }
    if (n == total) break;

    Box nb;
    nb.d = d;
    for (std::size_t i = 0; i < d; ++i) {
      nb.lo[i] = cur.lo[i] + pb.lo[i];
      nb.hi[i] = cur.hi[i] + pb.hi[i];
    }
    nb = intersect(nb, useful(n + 1));
    if (nb.empty()) break;
    if (nb.cells() > limits.max_cells) {
      throw std::length_error("ct_sequence: power " + std::to_string(n + 1) + " needs " +
                              std::to_string(nb.cells()) + " coefficients, above the cap of " +
                              std::to_string(limits.max_cells));
    }
    next.assign(nb.cells(), arith.zero());
    const Coord cs = cur.strides();
    const Coord ns = nb.strides();

    for (const auto& term : pterms) {
      Box src;
      src.d = d;
      for (std::size_t i = 0; i < d; ++i) {
        src.lo[i] = std::max(cur.lo[i], nb.lo[i] - term.off[i]);
        src.hi[i] = std::min(cur.hi[i], nb.hi[i] - term.off[i]);
      }
      if (src.empty()) continue;
      const long run = src.hi[d - 1] - src.lo[d - 1] + 1;
      Coord pos = src.lo;
      for (;;) {
        long si = 0;
        long di = 0;
        for (std::size_t i = 0; i < d; ++i) {
          si += (pos[i] - cur.lo[i]) * cs[i];
          di += (pos[i] + term.off[i] - nb.lo[i]) * ns[i];
        }
        arith.axpy(next.data() + di, data.data() + si, term.c, run);
        // Advance the outer coordinates (all but the last).
        std::size_t i = d - 1;
        bool done = true;
        while (i-- > 0) {
          if (pos[i] < src.hi[i]) {
            ++pos[i];
            done = false;
            break;
          }
          pos[i] = src.lo[i];
        }
        if (done) break;
      }
    }
    arith.finalize(next);
    data.swap(next);
    cur = nb;
  }
  return out;
}

}  // namespace

std::vector<SequenceWindow> ct_sequences(const LaurentPoly& P, std::span<const LaurentPoly> Q,
                                         std::span<const std::size_t> n_max,
                                         const std::optional<Modulus>& mod,
                                         const PoweringLimits& limits) {
  if (Q.size() != n_max.size()) throw std::invalid_argument("ct_sequences: size mismatch");
  if (Q.empty()) return {};
  for (const auto& q : Q) {
    if (q.dim() != P.dim()) throw std::invalid_argument("ct_sequences: dimension mismatch");
  }
  if (!mod) return run_powering(ExactArith{}, P, Q, n_max, mod, limits);

  const std::uint64_t m = mod->value();
  std::size_t nterms = std::max<std::size_t>(P.size(), 1);
  // Largest value a cell can reach before its reduction.
  unsigned __int128 max_acc = static_cast<unsigned __int128>(m - 1) * (m - 1) * nterms + (m - 1);
  if (max_acc <= std::numeric_limits<std::uint16_t>::max()) {
    return run_powering(ResidueArith<std::uint16_t>(m, static_cast<std::uint64_t>(max_acc)), P, Q,
                        n_max, mod, limits);
  }
  if (max_acc <= std::numeric_limits<std::uint32_t>::max()) {
    return run_powering(ResidueArith<std::uint32_t>(m, 0), P, Q, n_max, mod, limits);
  }
  if (max_acc <= std::numeric_limits<std::uint64_t>::max()) {
    return run_powering(ResidueArith<std::uint64_t>(m, 0), P, Q, n_max, mod, limits);
  }
  return run_powering(ExactArith{Integer(static_cast<unsigned long>(m))}, P, Q, n_max, mod, limits);
}

SequenceWindow ct_sequence(const CtSpec& spec, std::size_t n_max, const std::optional<Modulus>& mod,
                           const PoweringLimits& limits) {
  std::array<LaurentPoly, 1> qs{spec.Q};
  std::array<std::size_t, 1> ns{n_max};
  return std::move(ct_sequences(spec.P, qs, ns, mod, limits)[0]);
}

CongruenceReport cross_check(const CtSpec& spec, const std::string& oracle_name,
                             const Oracle& oracle, std::size_t n_max) {
  CongruenceReport report;
  report.kind = "cross-check";
  report.params["oracle"] = oracle_name;
  report.params["n_max"] = n_max;
  SequenceWindow seq = ct_sequence(spec, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Integer expected = oracle(n);
    ++report.checked;
    if (expected != seq[n]) {
      report.fail({{{"n", static_cast<std::int64_t>(n)}}, expected, seq[n]});
      break;
    }
  }
  return report;
}

}  // namespace lucasx
