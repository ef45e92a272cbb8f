#include "lucasx/parser.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <optional>
#include <sstream>

namespace lucasx {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr std::string_view kAllowedVariables = "xyzw";

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {
    if (vars.empty() || vars.size() > kMaxDim) {
      throw std::invalid_argument("expression needs between 1 and 4 declared variables");
    }
  }

  LaurentPoly parse_all() {
    LaurentPoly f = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  std::size_t dim() const { return vars_.size(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool peek_power() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') return true;
    return text_.substr(pos_, 2) == "**";
  }

  void consume_power() { pos_ += text_[pos_] == '^' ? 1 : 2; }

  bool peek_mul() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == '*' && text_.substr(pos_, 2) != "**";
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      auto c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    for (;;) {
      if (peek_mul()) {
        ++pos_;
        acc = mul(acc, unary());
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        LaurentPoly divisor = unary();
        acc = divide(acc, divisor, at);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    auto c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!peek_power()) return base;
    std::size_t at = pos_;
    consume_power();
    long e = exponent();
    if (e >= 0) return pow(base, static_cast<unsigned long>(e));
    if (base.size() != 1) {
      pos_ = at;
      fail("negative power of a non-monomial");
    }
    const auto& [m, c] = *base.terms().begin();
    if (c != 1 && c != -1) {
      pos_ = at;
      fail("negative power of a coefficient other than +-1");
    }
    Monomial inv;
    for (std::size_t i = 0; i < kMaxDim; ++i) inv[i] = static_cast<int>(m[i] * e);
    Integer coeff = (c == -1 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
    return LaurentPoly::term(dim(), inv, coeff);
  }

  long exponent() {
    auto c = peek();
    bool negative = false;
    if (c == '-' || c == '+') {
      negative = *c == '-';
      ++pos_;
      skip_space();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer exponent");
    }
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  LaurentPoly atom() {
    auto c = peek();
    if (!c) fail("unexpected end of expression");
    if (*c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(dim(), Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(*c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return LaurentPoly::variable(dim(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den, std::size_t at) {
    if (den.size() != 1) {
      pos_ = at;
      fail(den.is_zero() ? "division by zero" : "divisor is not a single monomial");
    }
    const auto& [dm, dc] = *den.terms().begin();
    LaurentPoly out(dim());
    for (const auto& [m, c] : num.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) {
        pos_ = at;
        fail("coefficient " + c.get_str() + " is not divisible by " + dc.get_str());
      }
      Integer q = c / dc;
      out.add_term(m + (-dm), q);
    }
    return out;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

LaurentPoly parse(const ExprSource& src) { return parse(src.text, src.variables); }

LaurentPoly parse(std::string_view text, const std::vector<std::string>& variables) {
  Parser parser(text, variables);
  return parser.parse_all();
}

std::vector<std::string> parse_variable_list(std::string_view list) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss{std::string(list)};
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.size() != 1 || kAllowedVariables.find(item[0]) == std::string_view::npos) {
      throw std::invalid_argument("variables must be drawn from x, y, z, w; got '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) != out.end()) {
      throw std::invalid_argument("variable '" + item + "' declared twice");
    }
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("no variables declared");
  return out;
}

std::vector<std::string> default_variables(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim && i < kAllowedVariables.size(); ++i) {
    out.emplace_back(1, kAllowedVariables[i]);
  }
  return out;
}

std::string to_canonical_string(const LaurentPoly& f, const std::vector<std::string>& variables) {
  if (variables.size() != f.dim()) {
    throw std::invalid_argument("to_canonical_string: variable count does not match dimension");
  }
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = c < 0;
    Integer mag = abs(c);
    std::string mono = monomial_text(m, variables);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = (first && negative) ? "1*" + mono : mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

std::string to_canonical_string(const LaurentPoly& f) {
  return to_canonical_string(f, default_variables(f.dim()));
}

}  // namespace lucasx
